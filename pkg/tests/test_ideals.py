import itertools

import pytest

from idealgraph.ideals import (
    all_left_ideals,
    chromatic_bound_data,
    is_left_ideal,
    left_ideal_masks,
    mask_to_elements,
    maximality_via_lclass,
)
from idealgraph.semigroup import generate, parse_family


def brute_force_left_ideals(table):
    """Oracle: test every nonempty subset directly against the definition."""
    n = table.order
    out = []
    for mask in range(1, 1 << n):
        subset = mask_to_elements(mask)
        closed = all(
            table.product(s, a) in subset for s in range(n) for a in subset
        )
        if closed:
            out.append(mask)
    return sorted(out)


@pytest.mark.parametrize(
    "spec", ["right-zero:3", "left-zero:3", "zn-multiplication:6",
             "rectangular-band:2,2", "cyclic-group:4", "null-with-zero:4"]
)
def test_left_ideal_masks_match_bruteforce(spec):
    t = generate(parse_family(spec))
    assert sorted(left_ideal_masks(t)) == brute_force_left_ideals(t)


def test_is_left_ideal_right_zero():
    t = generate(parse_family("right-zero:3"))
    # every nonempty subset is a left ideal of a right-zero semigroup
    for mask in range(1, 8):
        assert is_left_ideal(t, mask)


def test_is_left_ideal_zn():
    t = generate(parse_family("zn-multiplication:6"))
    assert is_left_ideal(t, {0, 2, 4})
    assert is_left_ideal(t, {0, 3})
    assert not is_left_ideal(t, {2, 4})  # 0 = 3*2 missing
    assert not is_left_ideal(t, {0, 1})


def test_family_right_zero_structure(rz3):
    _, fam, _ = rz3
    assert fam.zero is None
    assert len(fam.nontrivial) == 6  # 2^3 - 2 proper nonempty subsets
    assert len(fam.minimal) == 3
    assert len(fam.maximal) == 3
    assert fam.s_equals_union
    assert fam.union_of_minimals == fam.full_mask


def test_family_zn6_structure(z6):
    _, fam, _ = z6
    assert fam.zero == 0
    masks = {fam.all[i].mask for i in fam.nontrivial}
    # nontrivial left ideals of (Z6, *): {0,2,4}, {0,3}, {0,2,3,4}
    def m(*xs):
        out = 0
        for x in xs:
            out |= 1 << x
        return out

    assert masks == {m(0, 2, 4), m(0, 3), m(0, 2, 3, 4)}
    assert len(fam.minimal) == 2
    assert not fam.s_equals_union


def test_trivial_intersection_with_zero(z6):
    _, fam, _ = z6
    a = (1 << 0) | (1 << 2) | (1 << 4)
    b = (1 << 0) | (1 << 3)
    assert fam.trivial_intersection(a, b)  # meet is exactly {0}
    assert not fam.trivial_intersection(a, a)


def test_canonical_vertex_order(rz3):
    _, fam, _ = rz3
    sizes = [len(fam.all[i].elements) for i in fam.nontrivial]
    assert sizes == sorted(sizes)
    singles = [fam.all[i].elements for i in fam.nontrivial[:3]]
    assert singles == [(0,), (1,), (2,)]


def test_minimal_flags_consistent(order3_corpus):
    for t in order3_corpus:
        fam = all_left_ideals(t)
        nontrivial_masks = [fam.all[i].mask for i in fam.nontrivial]
        for i in fam.nontrivial:
            li = fam.all[i]
            has_proper_sub = any(
                m != li.mask and m & ~li.mask == 0 for m in nontrivial_masks
            )
            assert li.is_minimal == (not has_proper_sub)
            has_proper_super = any(
                m != li.mask and li.mask & ~m == 0 for m in nontrivial_masks
            )
            assert li.is_maximal == (not has_proper_super)


def test_maximality_via_lclass_agrees(order3_corpus):
    for t in order3_corpus:
        fam = all_left_ideals(t)
        for i in fam.nontrivial:
            li = fam.all[i]
            assert maximality_via_lclass(t, li.mask) == li.is_maximal


def test_union_closure_is_complete(order3_corpus):
    # the set of left ideals is closed under unions
    for t in order3_corpus:
        masks = set(left_ideal_masks(t))
        for a, b in itertools.combinations(masks, 2):
            assert (a | b) in masks


def test_chromatic_bound_rz4(rz4):
    _, fam, _ = rz4
    bd = chromatic_bound_data(fam)
    # S = U here: no vertex contains U, none lies outside it
    assert bd.x1 == () and bd.x3 == ()
    assert len(bd.x2) == 14
    assert bd.m == 0
    assert bd.bound == 2 ** 3 - 1


def test_chromatic_bound_zn6(z6):
    _, fam, _ = z6
    bd = chromatic_bound_data(fam)
    assert bd.n_min == 2
    assert len(bd.x1) == 1  # only {0,2,3,4} contains U = {0,2,3,4}... itself
    assert bd.bound >= 1


def test_to_json_dict(rz3):
    _, fam, _ = rz3
    doc = fam.to_json_dict()
    assert doc["schema"] == 1
    assert doc["s_equals_union"] is True
    assert len(doc["ideals"]) == len(fam.all)
