import json

import pytest

from idealgraph.cli import main
from idealgraph.semigroup import generate, parse_family


@pytest.fixture()
def rz3_file(tmp_path):
    t = generate(parse_family("right-zero:3"))
    p = tmp_path / "rz3.txt"
    p.write_text(t.to_text())
    return str(p)


def test_analyze_text(rz3_file, capsys):
    assert main(["analyze", rz3_file]) == 0
    out = capsys.readouterr().out
    assert "nontrivial left ideals: 6" in out
    assert "clique_number: 3" in out


def test_analyze_json(rz3_file, capsys):
    assert main(["analyze", rz3_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert doc["invariants"]["chromatic_number"] == 3
    assert len(doc["graph"]["edges"]) == 9


def test_analyze_dot(rz3_file, capsys):
    assert main(["analyze", rz3_file, "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph") and out.count("--") == 9


def test_gen_text(capsys):
    assert main(["gen", "--family", "right-zero", "--params", "3"]) == 0
    assert capsys.readouterr().out == "3\n0 1 2\n0 1 2\n0 1 2\n"


def test_gen_json_roundtrip(tmp_path, capsys):
    out = tmp_path / "rb.json"
    assert main(["gen", "--family", "rectangular-band", "--params", "2,2",
                 "--json", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1 and doc["order"] == 4


def test_gen_bad_family(capsys):
    assert main(["gen", "--family", "bogus", "--params", "3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_enumerate_count_only(capsys):
    assert main(["enumerate", "--order", "3", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "113"


def test_enumerate_stream(capsys):
    assert main(["enumerate", "--order", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8
    assert all(json.loads(line)["schema"] == 1 for line in lines)


def test_check_pass(rz3_file, capsys):
    assert main(["check", rz3_file]) == 0
    out = capsys.readouterr().out
    assert "T4.21-automorphism-group" in out and "fail" not in out


def test_check_json(rz3_file, capsys):
    assert main(["check", rz3_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == 1
    assert {c["status"] for c in doc["checks"]} <= {"pass", "inapplicable"}


def test_check_corpus_order(capsys):
    assert main(["check-corpus", "--order", "2", "--quiet"]) == 0
    out = capsys.readouterr().out
    assert "processed: 8" in out and "COUNTEREXAMPLE" not in out


def test_check_corpus_families(capsys):
    assert main(["check-corpus", "--families", "right-zero:3 rectangular-band:2,2",
                 "--quiet"]) == 0
    assert "processed: 2" in capsys.readouterr().out


def test_check_corpus_glob(tmp_path, rz3_file, capsys):
    assert main(["check-corpus", "--glob", rz3_file, "--quiet"]) == 0
    assert "processed: 1" in capsys.readouterr().out


def test_check_corpus_source_required(capsys):
    assert main(["check-corpus"]) == 2


def test_check_corpus_jsonl_output(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    assert main(["check-corpus", "--order", "2", "--quiet", "-o", str(out)]) == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(rows) == 8 and all(r["schema"] == 1 for r in rows)


def test_list_checks(capsys):
    assert main(["list-checks"]) == 0
    out = capsys.readouterr().out
    assert "T3.1-disconnected-classification" in out
    assert "T4.21-automorphism-group" in out


def test_list_checks_json(capsys):
    assert main(["list-checks", "--json"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 29
    assert all("id" in json.loads(line) for line in lines)


def test_missing_file(capsys):
    assert main(["analyze", "/nonexistent/table.txt"]) == 2
