import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from lambda_ecs import Graph, ParseError, emit, parse
from lambda_ecs.cli import run
from lambda_ecs.io import parse_edge_list, result_record

from test_graph import small_graphs


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_round_trip(g):
    assert parse(emit(g, ["note"])) == g


def test_weighted_round_trip():
    g = Graph(3, [(0, 1), (1, 2)], weights=[0.1, 7])
    assert parse(emit(g)) == g


@pytest.mark.parametrize(
    "text,line",
    [
        ("e 1 2\n", 1),
        ("p ecs 3 1 0 0\ne 1 4\n", 2),
        ("p ecs 3 1 0 0\ne 2 2\n", 2),
        ("p ecs 3 1 0 1\ne 1 2 -1\n", 2),
        ("p ecs 3 1 0 1\ne 1 2 nan\n", 2),
        ("p ecs 3 1 2 0\n", 1),
        ("c hi\np ecs 3 1 0 0\nx 1 2\n", 3),
        ("p ecs 3 1 0 0\np ecs 3 1 0 0\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.lineno == line
    assert str(info.value).startswith(f"line {line}: ")


def test_count_mismatch():
    with pytest.raises(ParseError):
        parse("p ecs 3 2 0 0\ne 1 2\n")


def test_record_sorted_one_based():
    rec = result_record("deletion_set", 1, 2, [5, 0], True)
    assert rec["edges"] == [1, 6]
    assert parse_edge_list("3, 1 2", 3) == [2, 0, 1]


def cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out.strip().splitlines()
    return code, json.loads(out[-1]) if out else None


@pytest.fixture
def c6(tmp_path):
    p = tmp_path / "c6.txt"
    p.write_text("p ecs 6 6 0 0\n" + "".join(f"e {i + 1} {(i + 1) % 6 + 1}\n" for i in range(6)))
    return str(p)


def test_cli_solve_yes_no(capsys, c6):
    code, rec = cli(capsys, "solve", "-i", c6, "--lambda", "1", "-k", "1")
    assert code == 0 and rec["status"] == "deletion_set" and rec["edges"] == [1] and rec["verified"]
    code, rec = cli(capsys, "solve", "-i", c6, "--lambda", "1", "-k", "2")
    assert code == 1 and rec["status"] == "no_solution" and rec["candidate_count"] == 6


def test_cli_verify_classify_oracle(capsys, c6):
    assert cli(capsys, "verify", "-i", c6, "--lambda", "1", "--remove", "3")[0] == 0
    assert cli(capsys, "verify", "-i", c6, "--lambda", "1", "--remove", "1,4")[0] == 1
    code, rec = cli(capsys, "classify", "-i", c6, "--lambda", "1")
    assert code == 0 and rec["deletable_count"] == 6
    code, rec = cli(capsys, "oracle", "-i", c6, "--lambda", "1", "-k", "2")
    assert code == 1


def test_cli_error_codes(capsys, tmp_path, c6):
    bad = tmp_path / "bad.txt"
    bad.write_text("p ecs 2 1 0 0\ne 1 5\n")
    code, rec = cli(capsys, "solve", "-i", str(bad), "--lambda", "1", "-k", "1")
    assert code == 2 and rec["status"] == "error" and "line 2" in rec["message"]
    assert cli(capsys, "solve", "-i", c6, "--lambda", "3", "-k", "1")[0] == 2
    assert cli(capsys, "solve-weighted", "-i", c6, "--lambda", "1", "-k", "1")[0] == 2
    assert cli(capsys, "solve", "-i", c6, "--lambda", "1", "-k", "2", "--enum-budget", "3")[0] == 3
    assert run(["solve"]) == 2
    capsys.readouterr()


def test_cli_gen_weighted_med(capsys, tmp_path):
    out = tmp_path / "g.txt"
    assert run(["gen", "--model", "ham-union", "--n", "7", "--lambda", "2", "--extra", "3", "--seed", "4", "-o", str(out)]) == 0
    g = parse(out.read_text())
    assert g.n == 7 and g.m == 10
    w = tmp_path / "w.txt"
    w.write_text(emit(g.with_weights(range(g.m))))
    code, rec = cli(capsys, "solve-weighted", "-i", str(w), "--lambda", "2", "-k", "2")
    code2, rec2 = cli(capsys, "oracle", "-i", str(w), "--lambda", "2", "-k", "2", "--weighted")
    assert code == code2 == 0 and rec["weight"] == rec2["weight"]
    k3 = tmp_path / "k3.txt"
    k3.write_text("p ecs 3 6 1 0\n" + "".join(f"e {u} {v}\n" for u in (1, 2, 3) for v in (1, 2, 3) if u != v))
    code, rec = cli(capsys, "med", "-i", str(k3), "-k", "3")
    assert code == 0 and len(rec["edges"]) == 3
    assert cli(capsys, "med", "-i", str(k3), "-k", "4")[0] == 1
    assert cli(capsys, "oracle", "-i", str(k3), "-k", "3", "--med")[0] == 0


def test_console_script_stdout():
    proc = subprocess.run(
        [sys.executable, "-m", "lambda_ecs.cli", "gen", "--model", "blob-cycle", "--blocks", "3",
         "--block-size", "2", "--lambda", "1", "--seed", "0", "-o", "-"],
        capture_output=True, text=True, check=True,
    )
    assert parse(proc.stdout).n == 6
