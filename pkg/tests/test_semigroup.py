import json

import pytest

from idealgraph.semigroup import (
    CayleyTable,
    FamilySpec,
    TableFormatError,
    direct_product,
    generate,
    l_class_partition,
    load_table,
    parse_family,
    parse_table_json,
    parse_table_text,
    principal_left_ideal,
    validate,
    zero_element,
)


def test_validate_right_zero():
    t = generate(parse_family("right-zero:4"))
    assert validate(t)


def test_validate_rejects_nonassociative():
    # x*y = x xor y on {0,1,2}: 1*(1*2) = 1*3 invalid range caught at build,
    # use a known nonassociative magma instead
    rows = ((0, 1, 2), (1, 0, 0), (2, 0, 1))
    t = CayleyTable.from_rows(rows)
    verdict = validate(t)
    assert not verdict
    a, b, c = verdict.witness
    assert t.product(t.product(a, b), c) != t.product(a, t.product(b, c))


def test_table_range_check():
    with pytest.raises((ValueError, TableFormatError)):
        CayleyTable.from_rows(((0, 5), (1, 0)))


def test_zero_element():
    t = generate(parse_family("zn-multiplication:6"))
    assert zero_element(t) == 0
    assert zero_element(generate(parse_family("right-zero:3"))) is None


def test_principal_left_ideal_right_zero():
    t = generate(parse_family("right-zero:3"))
    # in a right-zero semigroup x*a = a, so S^1 a = {a}
    for a in range(3):
        assert principal_left_ideal(t, a) == frozenset({a})


def test_principal_left_ideal_zn():
    t = generate(parse_family("zn-multiplication:6"))
    # S^1 2 = {2} u {2x mod 6} = {0, 2, 4}
    assert principal_left_ideal(t, 2) == frozenset({0, 2, 4})
    assert principal_left_ideal(t, 1) == frozenset(range(6))


def test_l_class_partition():
    t = generate(parse_family("zn-multiplication:6"))
    part = l_class_partition(t)
    blocks = {frozenset(b) for b in part.classes}
    # L-classes of (Z6, *): units {1,5}, {2,4}, {3}, {0}
    assert frozenset({1, 5}) in blocks
    assert frozenset({2, 4}) in blocks
    assert frozenset({3}) in blocks
    assert frozenset({0}) in blocks


def test_families_associative():
    for spec in ("right-zero:4", "left-zero:4", "null-with-zero:4",
                 "rectangular-band:2,3", "cyclic-group:5", "zn-multiplication:8"):
        assert validate(generate(parse_family(spec))), spec


def test_rectangular_band_law():
    t = generate(parse_family("rectangular-band:2,3"))
    # (i, lam)(j, mu) = (i, mu): product of x and y keeps x's row, y's column
    q = 3
    for x in range(6):
        for y in range(6):
            assert t.product(x, y) == (x // q) * q + (y % q)


def test_direct_product_matches_family():
    a = generate(parse_family("right-zero:2"))
    b = generate(parse_family("right-zero:3"))
    p = direct_product(a, b)
    assert validate(p)
    rz6 = generate(parse_family("right-zero:6"))
    assert p.rows == rz6.rows  # right-zero x right-zero = right-zero


def test_direct_product_spec():
    spec = FamilySpec(
        kind="direct-product",
        operands=(parse_family("left-zero:2"), parse_family("right-zero:2")),
    )
    t = generate(spec)
    assert t.order == 4 and validate(t)
    # left-zero x right-zero is the 2x2 rectangular band
    rb = generate(parse_family("rectangular-band:2,2"))
    assert t.rows == rb.rows


def test_parse_family_errors():
    with pytest.raises(ValueError):
        parse_family("nonsense:3")
    with pytest.raises(ValueError):
        parse_family("rectangular-band:3")  # needs two params
    with pytest.raises(ValueError):
        parse_family("right-zero:0")


def test_text_roundtrip(tmp_path):
    t = generate(parse_family("rectangular-band:2,2"))
    text = t.to_text()
    back = parse_table_text(text, name="rb")
    assert back.rows == t.rows
    p = tmp_path / "rb.txt"
    p.write_text(text)
    assert load_table(str(p)).rows == t.rows


def test_json_roundtrip(tmp_path):
    t = generate(parse_family("zn-multiplication:4"))
    doc = t.to_json_dict()
    assert doc["schema"] == 1
    back = parse_table_json(json.dumps(doc))
    assert back.rows == t.rows and back.order == 4
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    assert load_table(str(p)).rows == t.rows


def test_text_parse_diagnostics():
    with pytest.raises(TableFormatError):
        parse_table_text("2\n0 1\n")  # missing row
    with pytest.raises(TableFormatError):
        parse_table_text("2\n0 1\n0 7\n")  # out of range
    with pytest.raises(TableFormatError):
        parse_table_text("x\n")
