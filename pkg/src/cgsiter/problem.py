"""Problem files and output documents.

Problem file format::

    # comment
    parameters: c, r
    variables: x, y
    order_x: lex        # lex | degrevlex
    order_a: degrevlex  # lex | degrevlex
    ideal:
      x^2 + y^2 - 1
      (x - c)^2 + y^2 - r
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import __version__
from .algebra import ORDER_KINDS, RingSpec
from .cgs import CGSOutput, EngineConfig, Segment
from .errors import ParseError, UsageError
from .groebner import IdealHandle
from .polynomial import Polynomial, parse, render
from .stats import CATEGORIES, LABELS, Stats

_KEY = re.compile(r"^\s*(parameters|variables|order_x|order_a|ideal)\s*:(.*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@dataclass
class Problem:
    name: str
    ring: RingSpec
    generators: list[Polynomial]

    def ideal(self) -> IdealHandle:
        return IdealHandle(self.ring, self.generators)


def _names(value: str, lineno: int, col: int) -> tuple[str, ...]:
    out = []
    for part in value.split(","):
        part = part.strip()
        if not part:
            continue
        if not _NAME.match(part):
            raise ParseError(f"invalid name {part!r}", line=lineno, column=col)
        out.append(part)
    return tuple(out)


def parse_problem(text: str, name: str = "problem") -> Problem:
    fields: dict[str, tuple[str, int, int]] = {}
    ideal_lines: list[tuple[str, int, int]] = []
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _KEY.match(line)
        if m:
            key, value = m.group(1), m.group(2)
            if key in fields or (key == "ideal" and in_ideal):
                raise ParseError(f"duplicate key {key!r}", line=lineno, column=1)
            col = m.start(2) + 1
            if key == "ideal":
                in_ideal = True
                fields[key] = ("", lineno, col)
                if value.strip():
                    ideal_lines.append((value, lineno, col))
            else:
                in_ideal = False
                fields[key] = (value.strip(), lineno, col)
            continue
        if in_ideal:
            ideal_lines.append((line, lineno, 1))
            continue
        raise ParseError(f"unrecognized line {raw.strip()!r}", line=lineno, column=1)

    if "variables" not in fields:
        raise ParseError("missing 'variables:' declaration", line=1, column=1)
    if "ideal" not in fields:
        raise ParseError("missing 'ideal:' section", line=1, column=1)
    variables = _names(*fields["variables"])
    parameters = _names(*fields.get("parameters", ("", 1, 1)))
    orders = {}
    for key, default in (("order_x", "lex"), ("order_a", "degrevlex")):
        value, lineno, col = fields.get(key, (default, 1, 1))
        if value not in ORDER_KINDS:
            raise ParseError(f"{key} must be one of {', '.join(ORDER_KINDS)}", line=lineno, column=col)
        orders[key] = value
    try:
        ring = RingSpec(variables, parameters, orders["order_x"], orders["order_a"])
    except UsageError as exc:
        raise ParseError(str(exc), line=fields["variables"][1], column=1) from None

    gens = []
    for line, lineno, col in ideal_lines:
        try:
            gens.append(parse(line, ring))
        except ParseError as exc:
            raise ParseError(exc.message, line=lineno, column=col + (exc.pos or 0)) from None
    return Problem(name, ring, gens)


def load_problem(path: str | Path) -> Problem:
    path = Path(path)
    return parse_problem(path.read_text(), name=path.stem)


def builtin_problems() -> list[Problem]:
    """The example suite shipped with the package, sorted by name."""
    root = resources.files("cgsiter") / "problems"
    entries = sorted((p for p in root.iterdir() if p.name.endswith(".cgs")), key=lambda p: p.name)
    return [parse_problem(p.read_text(), name=p.name[:-4]) for p in entries]


def format_problem(problem: Problem) -> str:
    ring = problem.ring
    lines = [f"parameters: {', '.join(ring.parameters)}",
             f"variables: {', '.join(ring.variables)}",
             f"order_x: {ring.order_x}",
             f"order_a: {ring.order_a}",
             "ideal:"]
    lines += [f"  {render(g)}" for g in problem.generators]
    return "\n".join(lines) + "\n"


# -- output documents ---------------------------------------------------------

def _ideal_text(a: IdealHandle) -> list[str]:
    return [render(g) for g in a.generators]


def to_structured(out: CGSOutput, with_times: bool = False) -> dict:
    ring = out.ring
    return {
        "tool": "cgsiter",
        "version": __version__,
        "ring": {"variables": list(ring.variables), "parameters": list(ring.parameters),
                 "order_x": ring.order_x, "order_a": ring.order_a},
        "ideal": _ideal_text(out.ideal),
        "config": out.config.echo(),
        "segments": [
            {"vanishing": _ideal_text(s.vanishing),
             "exceptions": [_ideal_text(e) for e in s.exceptions],
             "basis": [render(g) for g in s.basis]}
            for s in out.segments
        ],
        "stats": out.stats.as_dict(with_times=with_times),
    }


def from_structured(doc: dict) -> CGSOutput:
    r = doc["ring"]
    ring = RingSpec(tuple(r["variables"]), tuple(r["parameters"]), r["order_x"], r["order_a"])

    def ideal(texts) -> IdealHandle:
        return IdealHandle(ring, [parse(t, ring) for t in texts])

    segments = [Segment(ideal(s["vanishing"]), [ideal(e) for e in s["exceptions"]],
                        [parse(t, ring) for t in s["basis"]])
                for s in doc["segments"]]
    cfg = doc.get("config", {})
    config = EngineConfig(basis_mode=cfg.get("basis_mode", "nabeshima"),
                          strategy=cfg.get("strategy", "deterministic"),
                          seed=cfg.get("seed", 0), prune_empty=cfg.get("prune_empty", False))
    st = Stats()
    sd = doc.get("stats", {})
    st.counts.update(sd.get("counts", {}))
    st.times.update(sd.get("times", {}))
    st.iterations = sd.get("iterations", 0)
    st.segments = sd.get("segments", len(segments))
    return CGSOutput(ideal(doc["ideal"]), segments, st, config)


def render_text(out: CGSOutput) -> str:
    ring = out.ring
    lines = [f"ring: Q[{', '.join(ring.parameters)}][{', '.join(ring.variables)}]"
             f"  order_x={ring.order_x} order_a={ring.order_a}",
             f"ideal: <{', '.join(_ideal_text(out.ideal))}>",
             f"segments: {len(out.segments)}"]
    for k, s in enumerate(out.segments, 1):
        lines.append("")
        lines.append(f"segment {k}")
        lines.append(f"  zero set of: <{', '.join(_ideal_text(s.vanishing)) or '0'}>")
        for e in s.exceptions:
            lines.append(f"  minus zero set of: <{', '.join(_ideal_text(e)) or '0'}>")
        lines.append("  basis:" if s.basis else "  basis: (empty: zero ideal)")
        lines.extend(f"    {render(g)}" for g in s.basis)
    return "\n".join(lines) + "\n"


def stats_table(rows: list[tuple[str, Stats | None]], with_times: bool = True) -> str:
    """One row per run with a count (and time) column per operation category."""
    head = ["problem"] + [LABELS[c] for c in CATEGORIES] + ["iter", "#"]
    if with_times:
        head.append("time")
    body = []
    for name, st in rows:
        if st is None:
            body.append([name] + ["-"] * (len(head) - 1))
            continue
        cells = [name]
        for c in CATEGORIES:
            cell = str(st.counts[c])
            if with_times:
                cell += f" {st.times[c]:.2f}s"
            cells.append(cell)
        cells += [str(st.iterations), str(st.segments)]
        if with_times:
            cells.append(f"{st.total_time:.2f}s")
        body.append(cells)
    widths = [max(len(r[i]) for r in [head] + body) for i in range(len(head))]
    fmt = lambda r: " | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(head), sep] + [fmt(r) for r in body]) + "\n"
