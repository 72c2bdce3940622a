"""Iterative computation of comprehensive Groebner systems.

The loop keeps a single work list of parameter-space vanishing ideals.  Each
round picks one ideal ``a``, computes the elimination basis of ``I + a`` and
either

* splits off the points of ``Z(a)`` that leave ``Z(g)`` (``g = (I+a) ∩ Q[A]``)
  with the inconsistent basis ``{1}``, queueing ``g``; or
* emits the stable segment given by the minimal leading power products and
  queues the ideals on which one of their parametric leading coefficients
  vanishes.

Queued ideals are kept inclusion-minimal using plain ideal membership
against cached bases.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Sequence

from . import stats as _stats
from .algebra import PowerProduct, RingSpec
from .errors import InvariantError, ResourceLimitError, UsageError
from .groebner import IdealHandle
from .ideals import (
    dimension,
    difference_nonempty,
    ideal_contains,
    ideal_product,
    intersect_with_params,
    minimal_monomial_basis,
    minimalize,
    squarefree_ideal,
)
from .polynomial import Polynomial, leading_x

BASIS_MODES = ("nabeshima", "ksw")
STRATEGIES = ("deterministic", "random")


@dataclass
class Segment:
    """Constructible set ``Z(vanishing) \\ (Z(e_1) ∪ ... ∪ Z(e_k))`` with its basis."""

    vanishing: IdealHandle
    exceptions: list[IdealHandle]
    basis: list[Polynomial]

    def contains(self, point: Sequence) -> bool:
        if any(g.value_at(point) != 0 for g in self.vanishing.generators):
            return False
        return all(any(g.value_at(point) != 0 for g in e.generators) for e in self.exceptions)


@dataclass
class EngineConfig:
    basis_mode: str = "nabeshima"
    strategy: str = "deterministic"
    seed: int = 0
    prune_empty: bool = False
    max_iterations: int | None = None
    max_seconds: float | None = None
    debug: bool = False

    def __post_init__(self) -> None:
        if self.basis_mode not in BASIS_MODES:
            raise UsageError(f"basis_mode must be one of {BASIS_MODES}")
        if self.strategy not in STRATEGIES:
            raise UsageError(f"strategy must be one of {STRATEGIES}")
        for name in ("max_iterations", "max_seconds"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise UsageError(f"{name} must be positive")

    def echo(self) -> dict:
        return {"algorithm": "iter", "basis_mode": self.basis_mode,
                "strategy": self.strategy, "seed": self.seed,
                "prune_empty": self.prune_empty}


@dataclass
class CGSOutput:
    ideal: IdealHandle
    segments: list[Segment]
    stats: _stats.Stats
    config: EngineConfig = field(default_factory=EngineConfig)

    @property
    def ring(self) -> RingSpec:
        return self.ideal.ring


def choose_vanishing(todo: list[IdealHandle], strategy: str = "deterministic",
                     rng: random.Random | None = None) -> IdealHandle:
    """Remove and return an ideal of maximum dimension from ``todo``."""
    if not todo:
        raise UsageError("choose_vanishing on an empty work list")
    dims = [dimension(a) for a in todo]
    top = max(dims)
    candidates = [i for i, d in enumerate(dims) if d == top]
    if strategy == "random":
        idx = (rng or random.Random()).choice(candidates)
    else:
        idx = min(candidates, key=lambda i: (len(todo[i].generators), i))
    return todo.pop(idx)


def segment_bases(G: Sequence[Polynomial], gA: IdealHandle, mode: str = "nabeshima"
                  ) -> tuple[list[PowerProduct], list[Polynomial], dict]:
    """Minimal leading X power products, the basis kept for them, and their LC ideals.

    ``G`` is the reduced elimination basis of ``I + a`` (increasing LPP order)
    and ``gA`` its pure-parameter part.
    """
    if mode not in BASIS_MODES:
        raise UsageError(f"unknown basis mode {mode!r}")
    ring = gA.ring
    rest = [g for g in G if not g.is_pure_a()]
    lead = [leading_x(g) for g in rest]
    mb = minimal_monomial_basis(t for t, _ in lead)
    mb.sort(key=ring.ordering.key)
    mbset = set(mb)
    if mode == "nabeshima":
        basis = [g for g, (t, _) in zip(rest, lead) if t in mbset]
        coeffs = {t: IdealHandle(ring, [lc for (s, lc) in lead if s == t]) for t in mb}
    else:
        chosen = {}
        for g, (t, lc) in zip(rest, lead):
            if t in mbset and t not in chosen:
                chosen[t] = (g, lc)
        basis = [g for g in rest if any(g is c[0] for c in chosen.values())]
        coeffs = {t: IdealHandle(ring, [chosen[t][1]]) for t in mb}
    return mb, basis, coeffs


def _check_antichain(todo: list[IdealHandle]) -> None:
    for i, a in enumerate(todo):
        for j, b in enumerate(todo):
            if i != j and ideal_contains(a, b):
                raise InvariantError(f"work list is not an antichain: {a!r} contains {b!r}")


def _check_growth(child: IdealHandle, parent: IdealHandle) -> None:
    if not ideal_contains(child, parent) or ideal_contains(parent, child):
        raise InvariantError(f"{child!r} does not strictly contain its parent {parent!r}")


def cgs_iter(ideal: IdealHandle | Sequence[Polynomial], config: EngineConfig | None = None,
             ring: RingSpec | None = None) -> CGSOutput:
    """Compute a comprehensive Groebner system of ``ideal``.

    Raises :class:`ResourceLimitError` (with partial stats and segments) if
    ``config.max_iterations`` or ``config.max_seconds`` is exceeded.
    """
    config = config or EngineConfig()
    if not isinstance(ideal, IdealHandle):
        ideal = list(ideal)
        ring = ring or (ideal[0].ring if ideal else None)
        if ring is None:
            raise UsageError("cannot infer the ring of an empty generator list")
        ideal = IdealHandle(ring, ideal)
    ring = ideal.ring
    st = _stats.Stats()
    out = CGSOutput(ideal, [], st, config)
    rng = random.Random(config.seed)
    start = time.perf_counter()
    segments = out.segments

    with _stats.collecting(st):
        if ring.n_a == 0:
            st.iterations = 1
            with st.timed("gb_ax"):
                G = IdealHandle(ring, ideal.generators).basis
            segments.append(Segment(IdealHandle(ring), [], list(G)))
        else:
            todo = [IdealHandle(ring)]
            while todo:
                if config.max_iterations is not None and st.iterations >= config.max_iterations:
                    st.segments = len(segments)
                    st.total_time = time.perf_counter() - start
                    raise ResourceLimitError(
                        f"iteration limit {config.max_iterations} reached", st, segments)
                if config.max_seconds is not None and time.perf_counter() - start > config.max_seconds:
                    st.segments = len(segments)
                    st.total_time = time.perf_counter() - start
                    raise ResourceLimitError(
                        f"time limit {config.max_seconds}s reached", st, segments)
                st.iterations += 1
                _step(ideal, todo, segments, config, rng)
                if config.debug:
                    _check_antichain(todo)
            if config.prune_empty:
                segments[:] = [s for s in segments if not _segment_empty(s)]
    st.segments = len(segments)
    st.total_time = time.perf_counter() - start
    return out


def _step(ideal: IdealHandle, todo: list[IdealHandle], segments: list[Segment],
          config: EngineConfig, rng: random.Random) -> None:
    ring = ideal.ring
    st = _stats.active()
    a = choose_vanishing(todo, config.strategy, rng)
    J = IdealHandle(ring, ideal.generators + a.generators)
    with st.timed("gb_ax"):
        G = J.basis
    g = intersect_with_params(J)

    def admit(b: IdealHandle) -> None:
        if b.is_unit():
            return
        if any(ideal_contains(b, z) for z in todo):
            return
        if config.debug:
            _check_growth(b, a)
        todo.append(b)

    if difference_nonempty(a, g):
        segments.append(Segment(a, [g], [Polynomial.constant(ring, 1)]))
        if not g.is_unit():
            admit(squarefree_ideal(g))
        return

    mb, basis, coeffs = segment_bases(G, g, config.basis_mode)
    segments.append(Segment(g, [coeffs[t] for t in mb], basis))
    fresh = [squarefree_ideal(coeffs[t] + g) for t in mb if not ideal_contains(g, coeffs[t])]
    for b in minimalize(fresh):
        admit(b)


def _segment_empty(seg: Segment) -> bool:
    v = seg.vanishing
    cover = IdealHandle(v.ring, [Polynomial.constant(v.ring, 1)])
    for e in seg.exceptions:
        cover = ideal_product(cover, e)
    return not difference_nonempty(v, v + cover)


def prune_empty_segments(out: CGSOutput) -> CGSOutput:
    """Copy of ``out`` without the segments whose constructible set is empty."""
    kept = [s for s in out.segments if not _segment_empty(s)]
    return CGSOutput(out.ideal, kept, out.stats, out.config)
