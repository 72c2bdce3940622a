"""``cgs`` command line.

Exit codes: 0 success, 1 input error, 2 resource limit hit, 3 verification
failure (only with ``--verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cgs import EngineConfig, cgs_iter
from .errors import CGSError, ParseError, ResourceLimitError
from .problem import Problem, builtin_problems, load_problem, render_text, stats_table, to_structured
from .stats import Stats
from .verify import random_point_suite

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_VERIFY = 0, 1, 2, 3
MAX_PARAMETERS = 8


def _engine_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--algorithm", choices=["iter"], default="iter")
    p.add_argument("--basis-mode", choices=["nabeshima", "ksw"], default="nabeshima")
    p.add_argument("--strategy", choices=["deterministic", "random"], default="deterministic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prune-empty", action="store_true")
    p.add_argument("--max-iterations", type=int, default=None)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--debug", action="store_true", help="check work-list invariants every iteration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cgs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"cgs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="compute the comprehensive Groebner system of a problem file")
    run.add_argument("file")
    _engine_args(run)
    run.add_argument("--verify", type=int, metavar="N", default=0,
                     help="check N random rational parameter points")
    run.add_argument("--output", choices=["text", "structured"], default="text")
    run.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    run.add_argument("--stats", action="store_true", help="print the operation table (and timings)")

    bench = sub.add_parser("bench", help="run a directory of problems (default: built-in suite)")
    bench.add_argument("directory", nargs="?")
    _engine_args(bench)
    bench.add_argument("--results", metavar="PATH", default="cgs-bench.json")
    bench.add_argument("--no-times", action="store_true", help="omit timing columns")
    return parser


def _config(args) -> EngineConfig:
    return EngineConfig(basis_mode=args.basis_mode, strategy=args.strategy, seed=args.seed,
                        prune_empty=args.prune_empty, max_iterations=args.max_iterations,
                        max_seconds=args.max_seconds, debug=args.debug)


def _check_problem(problem: Problem) -> None:
    if problem.ring.n_a > MAX_PARAMETERS:
        raise ParseError(f"at most {MAX_PARAMETERS} parameters are supported")


def cmd_run(args) -> int:
    try:
        problem = load_problem(args.file)
        _check_problem(problem)
        config = _config(args)
    except FileNotFoundError:
        print(f"cgs: no such file: {args.file}", file=sys.stderr)
        return EXIT_INPUT
    except (ParseError, CGSError) as exc:
        print(f"cgs: {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        out = cgs_iter(problem.ideal(), config)
    except ResourceLimitError as exc:
        print(f"cgs: {exc}", file=sys.stderr)
        print("partial statistics:", file=sys.stderr)
        print(stats_table([(problem.name, exc.stats)]), file=sys.stderr, end="")
        return EXIT_LIMIT

    report = random_point_suite(out, args.verify, args.seed) if args.verify > 0 else None

    if args.output == "structured":
        doc = to_structured(out, with_times=args.stats)
        if report is not None:
            doc["verification"] = report.as_dict()
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = render_text(out)
        if args.stats:
            text += "\n" + stats_table([(problem.name, out.stats)])
        if report is not None:
            text += "\n" + report.summary() + "\n"
            for f in report.failures:
                where = "uncovered" if f.segment is None else f"segment {f.segment + 1}"
                text += f"  FAIL at {tuple(str(v) for v in f.point)} ({where}): {f.reason}\n"

    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if report is not None and not report.ok:
        return EXIT_VERIFY
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        if args.directory:
            files = sorted(Path(args.directory).glob("*.cgs"))
            if not Path(args.directory).is_dir():
                raise FileNotFoundError(args.directory)
            problems: list = []
            for f in files:
                try:
                    problems.append(load_problem(f))
                except ParseError as exc:
                    problems.append((f.stem, str(exc)))
        else:
            problems = builtin_problems()
        config = _config(args)
    except FileNotFoundError:
        print(f"cgs: no such directory: {args.directory}", file=sys.stderr)
        return EXIT_INPUT
    except CGSError as exc:
        print(f"cgs: {exc}", file=sys.stderr)
        return EXIT_INPUT

    rows: list[tuple[str, Stats | None]] = []
    results = []
    for problem in problems:
        if isinstance(problem, tuple):
            rows.append((problem[0], None))
            results.append({"problem": problem[0], "status": "error", "error": problem[1]})
            continue
        try:
            _check_problem(problem)
            out = cgs_iter(problem.ideal(), config)
        except ResourceLimitError as exc:
            rows.append((problem.name, exc.stats))
            results.append({"problem": problem.name, "status": "limit", "error": str(exc),
                            "stats": exc.stats.as_dict(with_times=not args.no_times)})
            continue
        except CGSError as exc:
            rows.append((problem.name, None))
            results.append({"problem": problem.name, "status": "error", "error": str(exc)})
            continue
        rows.append((problem.name, out.stats))
        results.append({"problem": problem.name, "status": "ok",
                        "stats": out.stats.as_dict(with_times=not args.no_times)})

    sys.stdout.write(stats_table(rows, with_times=not args.no_times))
    doc = {"tool": "cgsiter", "version": __version__, "config": config.echo(), "results": results}
    if args.results:
        Path(args.results).write_text(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return cmd_run(args)
    return cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
