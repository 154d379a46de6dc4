import json
from pathlib import Path

import pytest

from mtrace.cli import main

BAD = str(Path(__file__).resolve().parent / "fixtures" / "bad.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


def test_validate(capsys):
    code, rep, _ = run(capsys, "validate", "--builtin", "sweedler")
    assert code == 0 and rep["valid"]
    code, rep, _ = run(capsys, "validate", "--builtin", "group_z", "2")
    assert code == 0
    code, rep, _ = run(capsys, "validate", BAD)
    assert code == 1 and rep["axiom"] == "coassociativity" and rep["witness"] == [2]


def test_validate_sabotage(capsys):
    code, rep, _ = run(capsys, "validate", "--builtin", "sweedler", "--sabotage", "pivot")
    assert code == 1 and not rep["valid"]


def test_trace_basis(capsys):
    code, rep, _ = run(capsys, "trace", "--builtin", "sweedler", "--auto-proj-cover",
                       "--module", "P0", "--basis")
    assert code == 0 and rep["values"] == ["1"] and all(rep["checks"].values())
    assert rep["via_s"] == rep["via_t"] == rep["values"]


def test_trace_not_in_ideal(capsys):
    code, rep, _ = run(capsys, "trace", "--builtin", "sweedler", "--auto-proj-cover",
                       "--module", "triv", "--basis")
    assert code == 3 and rep["error"] == "NotInIdeal"


def test_trace_expr_group(capsys):
    code, rep, _ = run(capsys, "trace", "--builtin", "group_z", "2", "--auto-proj-cover",
                       "--module", "reg", "--expr", "id(a (x) reg)")
    assert code == 0 and rep["value"] == "2"


def test_trace_bad_tuple(capsys):
    code, rep, _ = run(capsys, "trace", "--builtin", "sweedler", "--tuple", "P0,triv,triv",
                       "--module", "P0", "--basis")
    assert code == 3 and rep["error"] == "HomNotLine"


def test_check_all_sweedler(capsys):
    code, rep, _ = run(capsys, "check", "--builtin", "sweedler", "--suite", "all",
                       "--seed", "7", "--n", "25")
    assert code == 0 and rep["ok"] and rep["seed"] == 7
    assert all(rep["checks"].values()) and len(rep["checks"]) > 20


def test_check_cy_group(capsys):
    code, rep, _ = run(capsys, "check", "--builtin", "group_z", "2", "--suite", "cy")
    assert code == 0 and rep["ok"]
    assert rep["info"]["cy.twist_is_identity"]


def test_sabotage_fails_pivotal(capsys):
    code, rep, _ = run(capsys, "check", "--builtin", "sweedler", "--suite", "pivotal",
                       "--sabotage", "pivot", "--n", "5")
    assert code == 2 and not rep["ok"]
    assert not rep["checks"]["pivotal.snakes"]


def test_eval(capsys):
    code, rep, _ = run(capsys, "eval", "--builtin", "sweedler",
                       "--expr", "(id(P0) (x) ev_l(P0)) . (coev_l(P0) (x) id(P0))",
                       "--equals", "id(P0)")
    assert code == 0 and rep["equals"] is True


def test_examples_and_decompose(capsys):
    code, rep, _ = run(capsys, "examples", "--builtin", "sweedler")
    assert code == 0 and all(e.get("holds", True) for e in rep["examples"])
    code, rep, _ = run(capsys, "decompose", "--builtin", "sweedler")
    assert code == 0


def test_deterministic(capsys, monkeypatch):
    args = ("check", "--builtin", "taft", "3", "--suite", "mtrace", "--seed", "3", "--n", "4")
    first = run(capsys, *args)[2]
    second = run(capsys, *args)[2]
    assert first == second
    monkeypatch.setenv("MTRACE_SEED", "3")
    third = run(capsys, *args[:-4], "--n", "4")[2]
    assert third == first
