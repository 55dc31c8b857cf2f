"""Drive the command-line entry point in process and pin its output."""

import json

import pytest

from gammacalc.cli import main
from gammacalc.gammaset import representable
from gammacalc.serialize import dumps, gamma_set_to_json
from gammacalc.spheres import swap_orbit_quotient


def write_gamma(tmp_path, name, A):
    p = tmp_path / name
    p.write_text(dumps(gamma_set_to_json(A)), encoding="utf-8")
    return str(p)


@pytest.fixture
def rep22(tmp_path):
    return write_gamma(tmp_path, "rep22.json", representable(2, 2))


@pytest.fixture
def rep12(tmp_path):
    return write_gamma(tmp_path, "rep12.json", representable(1, 2))


def test_eval_prints_one_level(rep22, capsys):
    assert main(["eval", rep22, "--at", "2"]) == 0
    assert capsys.readouterr().out == "level 2: total 9, nonbase 8\n"


def test_eval_rejects_level_beyond_bound(rep22, capsys):
    assert main(["eval", rep22, "--at", "5"]) == 2
    assert "error:" in capsys.readouterr().err


def test_validate_accepts_representable(rep22, capsys):
    assert main(["validate", rep22]) == 0
    assert capsys.readouterr().out == "valid: bound 2, levels [0, 3, 8]\n"


def test_validate_flags_broken_action(tmp_path, rep22, capsys):
    doc = json.loads(open(rep22, encoding="utf-8").read())
    # reroute the degree-1 identity: functor laws now fail, shape still parses
    key = "1>1:[0,1]"
    assert doc["action"][key] == [0, 1, 2, 3]
    doc["action"][key] = [0, 0, 0, 0]
    bad = tmp_path / "bad.json"
    bad.write_text(dumps(doc), encoding="utf-8")
    assert main(["validate", str(bad)]) == 1
    assert capsys.readouterr().err.startswith("invalid:")


def test_unreadable_inputs_exit_2(tmp_path, capsys):
    junk = tmp_path / "junk.json"
    junk.write_text("{not json", encoding="utf-8")
    assert main(["validate", str(junk)]) == 2
    assert "invalid JSON" in capsys.readouterr().err
    assert main(["validate", str(tmp_path / "absent.json")]) == 2
    capsys.readouterr()


def test_prolong_emits_class_table(rep22, capsys):
    assert main(["prolong", rep22, "X:2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    # |Map(2, X)| classes for a degree-2 representable
    assert doc["classes"] == 9
    assert len(doc["witnesses"]) == 8


def test_prolong_rejects_bad_point_syntax(rep22, capsys):
    assert main(["prolong", rep22, "2"]) == 2
    assert "X:<size>" in capsys.readouterr().err


def test_smash_levels_and_output_file(tmp_path, rep12, capsys):
    assert main(["smash", rep12, rep12]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "level 0: total 1, nonbase 0"
    assert "level 2: total 3, nonbase 2" in out

    dst = str(tmp_path / "day.json")
    assert main(["smash", rep12, rep12, "-o", dst]) == 0
    # the written functor must itself pass validation
    assert main(["validate", dst]) == 0
    assert "valid: bound 2, levels [0, 1, 2]" in capsys.readouterr().out


def test_circle_matches_unit_behaviour(rep12, capsys):
    assert main(["circle", rep12, rep12]) == 0
    out = capsys.readouterr().out
    assert "level 1: total 2, nonbase 1" in out
    assert "level 2: total 3, nonbase 2" in out


def test_bound_flag_validation(rep12, capsys):
    assert main(["smash", rep12, rep12, "--bound", "7"]) == 2
    assert "stored range" in capsys.readouterr().err


def test_assembly_check(rep12, capsys):
    assert main(["assembly", rep12, rep12, "--check"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1] == "assembly natural: OK"
    assert lines[0].startswith("level 0: [0")


def test_spheres_report(capsys):
    assert main(["spheres", "--n", "2", "--max-degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "∂Γ²(2)=7  ∂_outΓ²(2)=5" in out
    assert "partitions of {1..2}: 2" in out
    assert "partition ↔ monogenic subobject correspondence: OK" in out
    assert "∂Γ²/∂_outΓ² ≅ Γ¹: OK" in out
    assert "cofiber sequence levelwise exact: OK" in out
    # the level-2 table row carries the six frozen totals
    row2 = next(l for l in out.splitlines() if l.startswith("    2 |"))
    assert [int(c.strip()) for c in row2.split("|")[1:]] == [9, 7, 5, 3, 5, 3]


def test_spheres_rejects_bad_range(capsys):
    assert main(["spheres", "--n", "0", "--max-degree", "2"]) == 2
    capsys.readouterr()


def test_cofibrant_verdicts(tmp_path, rep22, capsys):
    assert main(["cofibrant", rep22]) == 0
    assert capsys.readouterr().out == "cofibrant: yes\n"
    q = write_gamma(tmp_path, "quot.json", swap_orbit_quotient(2))
    assert main(["cofibrant", q]) == 0
    assert capsys.readouterr().out == "cofibrant: no\n"


def test_laws_bar_suite_plain_and_json(capsys):
    assert main(["laws", "--suite", "bar", "--size", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1].endswith("reports, 0 violations")
    assert all(", violations 0" in l for l in out.splitlines()[:-1])

    assert main(["laws", "--suite", "bar", "--size", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert isinstance(doc, list) and doc
    for rec in doc:
        assert rec["violations"] == []
        assert rec["checked"] > 0


def test_laws_theory_suite(capsys):
    assert main(["laws", "--suite", "theory"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "TOTAL: 3 reports, 0 violations"


def test_argparse_failures_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["bogus-verb"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(["laws", "--suite", "unheard-of"])
