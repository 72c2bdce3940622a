"""Operation counters and timers for one CGS run.

Toolkit functions report into whichever :class:`Stats` is active in the
current context (see :func:`collecting`); with none active they cost nothing.
"""

from __future__ import annotations

import time
from contextlib import contextmanager, nullcontext
from contextvars import ContextVar
from dataclasses import dataclass, field

CATEGORIES = ("gb_ax", "gb_a", "containment", "emptiness", "mb", "sqfr")

LABELS = {
    "gb_ax": "GB in K[A,X]",
    "gb_a": "GB in K[A]",
    "containment": "check a<=b",
    "emptiness": "check V(a)\\V(b)",
    "mb": "MB",
    "sqfr": "sqfr",
}


@dataclass
class Stats:
    counts: dict = field(default_factory=lambda: dict.fromkeys(CATEGORIES, 0))
    times: dict = field(default_factory=lambda: dict.fromkeys(CATEGORIES, 0.0))
    iterations: int = 0
    segments: int = 0
    total_time: float = 0.0

    @contextmanager
    def timed(self, category: str):
        self.counts[category] += 1
        start = time.perf_counter()
        try:
            yield
        finally:
            self.times[category] += time.perf_counter() - start

    def as_dict(self, with_times: bool = True) -> dict:
        out = {"counts": dict(self.counts), "iterations": self.iterations,
               "segments": self.segments}
        if with_times:
            out["times"] = {k: round(v, 6) for k, v in self.times.items()}
            out["total_time"] = round(self.total_time, 6)
        return out


_active: ContextVar[Stats | None] = ContextVar("cgsiter_stats", default=None)


def active() -> Stats | None:
    return _active.get()


def record(category: str):
    stats = _active.get()
    return stats.timed(category) if stats is not None else nullcontext()


@contextmanager
def collecting(stats: Stats):
    token = _active.set(stats)
    try:
        yield stats
    finally:
        _active.reset(token)
