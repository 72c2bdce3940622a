import json
from importlib import resources

import pytest

from cgsiter.cgs import EngineConfig, cgs_iter
from cgsiter.cli import main
from cgsiter.problem import (
    format_problem, from_structured, load_problem, parse_problem, to_structured,
)
from cgsiter.errors import ParseError

PROBLEMS = resources.files("cgsiter") / "problems"


@pytest.fixture
def circles_file(tmp_path):
    path = tmp_path / "circles.cgs"
    path.write_text((PROBLEMS / "two_circles.cgs").read_text())
    return path


def test_run_verify(circles_file, capsys):
    assert main(["run", str(circles_file), "--verify", "200", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "coverage 200/200, all segments verified" in out
    assert "segments: 3" in out


def test_missing_file(tmp_path, capsys):
    assert main(["run", str(tmp_path / "nope.cgs")]) == 1
    assert "no such file" in capsys.readouterr().err


def test_iteration_limit(circles_file, capsys):
    assert main(["run", str(circles_file), "--max-iterations", "1"]) == 2
    err = capsys.readouterr().err
    assert "partial statistics" in err and "GB in K[A,X]" in err


def test_parse_error_has_position(tmp_path, capsys):
    bad = tmp_path / "bad.cgs"
    bad.write_text("parameters: c\nvariables: x\nideal:\n  x^2 +\n")
    assert main(["run", str(bad)]) == 1
    assert "line 4, column" in capsys.readouterr().err


def test_too_many_parameters(tmp_path, capsys):
    f = tmp_path / "big.cgs"
    names = ", ".join(f"a{i}" for i in range(9))
    f.write_text(f"parameters: {names}\nvariables: x\nideal:\n  a0*x - 1\n")
    assert main(["run", str(f)]) == 1


def test_verification_failure_exit_code(circles_file, tmp_path, monkeypatch, capsys):
    import cgsiter.cli as cli
    real = cli.cgs_iter

    def broken(*a, **k):
        out = real(*a, **k)
        out.segments[0].basis = out.segments[0].basis[1:]
        return out
    monkeypatch.setattr(cli, "cgs_iter", broken)
    assert main(["run", str(circles_file), "--verify", "50"]) == 3
    assert "FAIL at" in capsys.readouterr().out


def test_structured_round_trip(circles_file, tmp_path):
    target = tmp_path / "out.json"
    assert main(["run", str(circles_file), "--output", "structured", "--out", str(target),
                 "--basis-mode", "ksw"]) == 0
    doc = json.loads(target.read_text())
    assert doc["config"]["basis_mode"] == "ksw"
    assert set(doc["segments"][0]) == {"vanishing", "exceptions", "basis"}
    back = from_structured(doc)
    direct = cgs_iter(load_problem(circles_file).ideal(), EngineConfig(basis_mode="ksw"))
    assert [s.basis for s in back.segments] == [s.basis for s in direct.segments]
    assert [s.vanishing.generators for s in back.segments] == [
        s.vanishing.generators for s in direct.segments]
    assert to_structured(back) == doc


def test_structured_output_is_byte_identical(circles_file, capsys):
    runs = []
    for _ in range(2):
        assert main(["run", str(circles_file), "--output", "structured", "--strategy", "random",
                     "--seed", "3"]) == 0
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]


def test_stats_flag(circles_file, capsys):
    assert main(["run", str(circles_file), "--stats"]) == 0
    out = capsys.readouterr().out
    for label in ("GB in K[A,X]", "GB in K[A]", "check a<=b", "check V(a)\\V(b)", "MB", "sqfr"):
        assert label in out


def test_bench(tmp_path, capsys):
    suite = tmp_path / "suite"
    suite.mkdir()
    for name in ("two_circles", "synthetic_linear", "synthetic_quadratic"):
        (suite / f"{name}.cgs").write_text((PROBLEMS / f"{name}.cgs").read_text())
    results = tmp_path / "bench.json"
    assert main(["bench", str(suite), "--results", str(results), "--no-times"]) == 0
    table = capsys.readouterr().out
    rows = table.strip().splitlines()[2:]
    assert len(rows) == 3
    for row in rows:
        cells = [c.strip() for c in row.split("|")]
        assert all(int(c) > 0 for c in cells[1:])
    doc = json.loads(results.read_text())
    circles = next(r for r in doc["results"] if r["problem"] == "two_circles")
    assert circles["stats"]["counts"]["gb_ax"] == circles["stats"]["iterations"]
    assert main(["bench", str(suite), "--results", str(results), "--no-times"]) == 0
    assert capsys.readouterr().out == table


def test_bench_records_per_problem_errors(tmp_path, capsys):
    suite = tmp_path / "suite"
    suite.mkdir()
    (suite / "good.cgs").write_text((PROBLEMS / "two_circles.cgs").read_text())
    (suite / "bad.cgs").write_text("variables: x\nideal:\n  x +\n")
    results = tmp_path / "r.json"
    assert main(["bench", str(suite), "--results", str(results)]) == 0
    statuses = {r["problem"]: r["status"] for r in json.loads(results.read_text())["results"]}
    assert statuses == {"bad": "error", "good": "ok"}


def test_bench_builtin_suite(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["bench"]) == 0
    assert (tmp_path / "cgs-bench.json").exists()
    assert "two_circles" in capsys.readouterr().out


def test_bench_missing_directory(tmp_path):
    assert main(["bench", str(tmp_path / "nope"), "--results", ""]) == 1


def test_problem_format_round_trip():
    text = (PROBLEMS / "two_circles.cgs").read_text()
    prob = parse_problem(text, "two_circles")
    again = parse_problem(format_problem(prob), "two_circles")
    assert again.ring == prob.ring and again.generators == prob.generators


@pytest.mark.parametrize("text,line", [
    ("variables: x\nideal:\n  x ++\n", 3),
    ("variables: x\norder_x: grlex\nideal:\n  x\n", 2),
    ("parameters: c\nideal:\n  c\n", 1),
    ("variables: x\nfoo\nideal:\n  x\n", 2),
    ("variables: x, x\nideal:\n  x\n", 1),
])
def test_problem_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_problem(text)
    assert exc.value.line == line


def test_comments_are_ignored():
    prob = parse_problem("# header\nvariables: x  # one\nparameters: c\nideal:\n  c*x - 1 # gen\n")
    assert len(prob.generators) == 1
