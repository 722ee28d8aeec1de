import json

import pytest

from twistedburau.cli import main, parse_colors, InputError
from twistedburau.laurent import parse_poly
from twistedburau.representation import ColorMap, Representation, load_representation

from conftest import REPS

TREFOIL_FILE = str(REPS / "trefoil.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_burau_trivial(capsys):
    code, data = run_json(capsys, "burau", "--braid", "s1", "--colors", "1,1")
    assert code == 0
    assert data["matrix"] == [["1 - t", "t"], ["1", "0"]]


def test_burau_gassner_both_routes(capsys):
    expected = [["1 - t1 + t1*t2", "t1 - t1^2"], ["1 - t2", "t1"]]
    _, data = run_json(capsys, "burau", "--braid", "s1 s1", "--colors", "1,2")
    assert data["matrix"] == expected
    _, data = run_json(capsys, "burau", "--braid", "s1^2", "--colors", "1,2", "--letterwise")
    assert data["matrix"] == expected


def test_burau_empty(capsys):
    code, data = run_json(capsys, "burau", "--braid", "", "--colors", "1")
    assert code == 0
    assert data["matrix"] == [["1"]]


def test_reduced_examples(capsys):
    _, data = run_json(capsys, "reduced", "--braid", "s1", "--colors", "1,1")
    assert data["matrix"] == [["-t"]]
    _, data = run_json(capsys, "reduced", "--braid", "s1^3", "--colors", "1,1", "--rep", TREFOIL_FILE)
    assert data["matrix"] == [["-s*t^3", "s*t^3 - s^2*t^3"], ["-s*t^3", "s*t^3"]]
    _, data = run_json(capsys, "reduced", "--braid", "", "--colors", "1,2,1")
    assert data["matrix"] == [["1", "0"], ["0", "1"]]


def test_pretty_output(capsys):
    code, out = run(capsys, "reduced", "--braid", "s1", "--colors", "1,1")
    assert code == 0
    assert "-t" in out


def test_torsion_hopf(capsys):
    code, data = run_json(capsys, "torsion", "--braid", "s1 s1", "--colors", "1,2")
    assert code == 0
    routes = {r["route"]: r for r in data["results"]}
    assert set(routes) == {"wada", "burau"}
    for r in routes.values():
        assert r["normal_form"] == {"numerator": "1", "denominator": "1"}


def test_torsion_single_route_and_drops(capsys):
    _, data = run_json(capsys, "torsion", "--braid", "s1^3", "--colors", "1,1", "--rep", TREFOIL_FILE,
                       "--route", "wada", "--drop-relator", "1", "--drop-column", "2")
    assert [r["route"] for r in data["results"]] == ["wada"]
    assert data["results"][0]["normal_form"]["numerator"] == "1 - s*t^2"
    _, data = run_json(capsys, "torsion", "--braid", "s1^3", "--colors", "1,1", "--rep", TREFOIL_FILE,
                       "--route", "burau", "--no-normalize")
    assert "normal_form" not in data["results"][0]


def test_verify_trefoil(capsys):
    code, out = run(capsys, "verify", "--braid", "s1^3", "--colors", "1,1", "--rep", TREFOIL_FILE)
    assert code == 0
    assert "verdict: pass" in out
    assert "torsion normalized: 1 - s*t^2" in out


def test_verify_not_applicable(capsys):
    argv = ["verify", "--braid", "s1", "--colors", "1,1", "--rep", TREFOIL_FILE]
    code, data = run_json(capsys, *argv)
    assert code == 1
    assert data["verdict"] == "not applicable"
    assert data["failing_generators"] == [1, 2]
    code, _ = run(capsys, *argv, "--allow-nonextendable")
    assert code == 0


def test_alexander(capsys):
    _, data = run_json(capsys, "alexander", "--braid", "s1 s2^-1 s1 s2^-1", "--colors", "1,1,1")
    assert data["result"]["normal_form"]["numerator"] == "1 - 3*t + t^2"
    _, data = run_json(capsys, "alexander", "--braid", "s1^3")
    assert data["result"]["normal_form"]["numerator"] == "1 - t + t^2"


@pytest.mark.parametrize("argv", [
    ["burau", "--braid", "s0", "--colors", "1,1"],
    ["burau", "--braid", "s1 x", "--colors", "1,1"],
    ["burau", "--braid", "s1^0", "--colors", "1,1"],
    ["burau", "--braid", "s2", "--colors", "1,1"],
    ["burau", "--braid", "s1", "--colors", "1,3"],
    ["burau", "--braid", "s1", "--colors", "1,a"],
    ["burau", "--braid", "s1", "--colors", "1,1", "--rep", "/nonexistent.json"],
    ["torsion", "--braid", "s1", "--colors", "1,2"],
    ["torsion", "--braid", "s1 s1", "--colors", "1,2", "--drop-relator", "5"],
])
def test_input_errors_exit_2(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err


def test_bad_rep_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "k": 1, "variables": ["s"], "images": [[["1 + s"]], [["1"]]]}))
    code = main(["burau", "--braid", "s1", "--colors", "1,1", "--rep", str(path)])
    assert code == 2
    assert "1 + s" in capsys.readouterr().err


def test_parse_colors():
    assert parse_colors("1,2,1") == (1, 2, 1)
    assert parse_colors(" 2 , 1 ") == (2, 1)
    with pytest.raises(InputError):
        parse_colors("")


def test_json_round_trip(capsys):
    rep = load_representation(json.loads(open(TREFOIL_FILE).read()))
    reg = ColorMap((1, 2)).registry_for(rep)
    code, data = run_json(capsys, "burau", "--braid", "s1^2 s1^-1 s1", "--colors", "1,2",
                          "--rep", TREFOIL_FILE)
    assert code == 0
    for row in data["matrix"]:
        for text in row:
            assert str(parse_poly(text, reg)) == text
    _, data = run_json(capsys, "torsion", "--braid", "s1 s1", "--colors", "1,2")
    reg = ColorMap((1, 2)).registry_for(Representation.trivial(2))
    for r in data["results"]:
        for frac in (r["raw"], r["normal_form"]):
            for text in frac.values():
                assert str(parse_poly(text, reg)) == text


def test_selftest(capsys):
    code, out = run(capsys, "selftest", "--seed", "3", "--cases", "8", "--pairs", "10")
    assert code == 0
    assert "cocycle" in out and "torsion identity" in out
    code, data = run_json(capsys, "selftest", "--seed", "3", "--cases", "4", "--pairs", "4")
    assert code == 0
    assert data["failures"] == []
