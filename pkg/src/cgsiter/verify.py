"""Specialization checks for computed comprehensive Groebner systems.

A segment is checked at a rational point by specializing its basis and
comparing it against a reduced basis of the specialized input computed from
scratch.  Only rational points are sampled, so a failure is always a genuine
counterexample, while passing is evidence rather than proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cgs import CGSOutput, Segment
from .errors import UsageError
from .groebner import IdealHandle, is_groebner_basis, reduced_groebner_basis, reduces_to_zero
from .polynomial import evaluate_params, render

NUMERATOR_RANGE = (-10, 10)
DENOMINATORS = (1, 2, 3)


def point_in_segment(point: Sequence, seg: Segment) -> bool:
    return seg.contains(point)


@dataclass
class PointReport:
    passed: bool
    point: tuple
    details: str = ""
    specialized_basis: list = field(default_factory=list)
    direct_basis: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def verify_at_point(ideal: IdealHandle, seg: Segment, point: Sequence) -> PointReport:
    """Check that the specialized segment basis is a Groebner basis of the specialized ideal."""
    point = tuple(Fraction(v) for v in point)
    if not seg.contains(point):
        raise UsageError(f"point {point} does not lie in the segment")
    ring = ideal.ring
    E = [e for e in (evaluate_params(g, point) for g in seg.basis) if not e.is_zero()]
    spec_I = [evaluate_params(f, point) for f in ideal.generators]
    spec_a = [evaluate_params(f, point) for f in seg.vanishing.generators]
    if any(not v.is_zero() for v in spec_a):
        return PointReport(False, point, "vanishing generators do not vanish at the point")
    R = reduced_groebner_basis(spec_I + spec_a, ring)

    def fail(msg: str) -> PointReport:
        return PointReport(False, point, msg, E, R)

    if E and not is_groebner_basis(E):
        return fail("specialized basis is not a Groebner basis")
    for e in E:
        if not (R and reduces_to_zero(e, R)):
            return fail(f"{render(e)} is not in the specialized ideal")
    for r in R:
        if not (E and reduces_to_zero(r, E)):
            return fail(f"{render(r)} is not generated by the specialized basis")
    return PointReport(True, point, "ok", E, R)


def random_point(rng: random.Random, n: int) -> tuple:
    lo, hi = NUMERATOR_RANGE
    return tuple(Fraction(rng.randint(lo, hi), rng.choice(DENOMINATORS)) for _ in range(n))


@dataclass
class SuiteFailure:
    point: tuple
    segment: int | None
    reason: str

    def as_dict(self) -> dict:
        return {"point": [str(v) for v in self.point], "segment": self.segment,
                "reason": self.reason}


@dataclass
class SuiteReport:
    points: int
    covered: int
    checks: int
    failures: list[SuiteFailure]

    @property
    def ok(self) -> bool:
        return not self.failures and self.covered == self.points

    def summary(self) -> str:
        head = f"coverage {self.covered}/{self.points}"
        if not self.failures:
            return head + ", all segments verified"
        return head + f", {len(self.failures)} failure(s)"

    def as_dict(self) -> dict:
        return {"points": self.points, "covered": self.covered, "checks": self.checks,
                "failures": [f.as_dict() for f in self.failures], "summary": self.summary()}


def check_point(out: CGSOutput, point: Sequence) -> tuple[bool, int, list[SuiteFailure]]:
    """Verify every segment covering ``point``; returns (covered, checks, failures)."""
    point = tuple(Fraction(v) for v in point)
    failures = []
    checks = 0
    covered = False
    for k, seg in enumerate(out.segments):
        if not seg.contains(point):
            continue
        covered = True
        checks += 1
        rep = verify_at_point(out.ideal, seg, point)
        if not rep.passed:
            failures.append(SuiteFailure(point, k, rep.details))
    if not covered:
        failures.append(SuiteFailure(point, None, "point not covered by any segment"))
    return covered, checks, failures


def random_point_suite(out: CGSOutput, n: int = 200, seed: int = 0,
                       points: Sequence[Sequence] = ()) -> SuiteReport:
    """Sample ``n`` rational points (plus any explicit ``points``) and verify coverage."""
    if n < 1 and not points:
        raise UsageError("need at least one point")
    rng = random.Random(seed)
    sample = [tuple(Fraction(v) for v in p) for p in points]
    sample += [random_point(rng, out.ring.n_a) for _ in range(max(n, 0))]
    covered = checks = 0
    failures: list[SuiteFailure] = []
    for p in sample:
        cov, c, fails = check_point(out, p)
        covered += cov
        checks += c
        failures.extend(fails)
    return SuiteReport(len(sample), covered, checks, failures)
