"""Ideal-level services used by the CGS loop.

Everything here works on :class:`~cgsiter.groebner.IdealHandle` objects and
reuses their cached reduced bases; the fresh-indeterminate tricks (radical
membership, gcd via lcm) build throwaway auxiliary rings.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from . import stats
from .algebra import PowerProduct, RingSpec
from .errors import UsageError
from .groebner import IdealHandle, reduced_groebner_basis
from .polynomial import Polynomial, divide_exact, partial_derivative


def intersect_with_params(J: IdealHandle) -> IdealHandle:
    """``J ∩ Q[A]``, read off the elimination basis of ``J``."""
    return IdealHandle.from_basis(J.ring, [g for g in J.basis if g.is_pure_a()])


def minimal_monomial_basis(pps: Iterable[PowerProduct]) -> list[PowerProduct]:
    """Minimal generators of the monomial ideal spanned by ``pps``.

    Result keeps first-seen order and contains no duplicates.
    """
    with stats.record("mb"):
        uniq = list(dict.fromkeys(tuple(p) for p in pps))
        out = []
        for p in uniq:
            if any(q != p and all(b <= a for a, b in zip(p, q)) for q in uniq):
                continue
            out.append(p)
        return out


def ideal_contains(big: IdealHandle, small: IdealHandle) -> bool:
    """``small ⊆ big``, by reducing small's generators against big's basis.

    Results are memoized on ``big``, which lives only as long as one run.
    """
    memo = big.__dict__.setdefault("_contains_memo", {})
    key = small.generators
    hit = memo.get(key)
    if hit is not None:
        return hit
    with stats.record("containment"):
        result = all(big.contains_poly(g) for g in small.generators)
    memo[key] = result
    return result


@lru_cache(maxsize=None)
def _rabinowitsch_ring(ring: RingSpec) -> RingSpec:
    t = ring.fresh_name("t")
    return RingSpec(ring.variables, ring.parameters + (t,), ring.order_x, "degrevlex")


@lru_cache(maxsize=None)
def _tag_ring(ring: RingSpec) -> RingSpec:
    # one tag variable eliminated ahead of the parameters
    t = ring.fresh_name("t")
    return RingSpec((t,), ring.parameters, "lex", ring.order_a)


def _require_pure_a(f: Polynomial, what: str) -> None:
    if not f.is_pure_a():
        raise UsageError(f"{what} expects a polynomial in the parameters only")


def in_radical(f: Polynomial, a: IdealHandle) -> bool:
    """``f ∈ √a`` via the unit-ideal test on ``a + <1 - t*f>``."""
    _require_pure_a(f, "in_radical")
    if f.is_zero() or a.contains_poly(f):
        return True
    if a.is_unit():
        return True
    if f.is_constant() or a.is_zero():
        # a proper; f a nonzero constant, or a nonzero f against the zero ideal
        return False
    S = _rabinowitsch_ring(a.ring)
    t = Polynomial.var(S, S.parameters[-1])
    gens = [g.embed(S) for g in a.basis] + [1 - t * f.embed(S)]
    B = reduced_groebner_basis(gens, S)
    return len(B) == 1 and B[0].is_constant()


def difference_nonempty(a: IdealHandle, g: IdealHandle) -> bool:
    """Is ``Z(a) \\ Z(g)`` nonempty over the algebraic closure?

    By the Nullstellensatz that fails exactly when ``g ⊆ √a``.
    """
    with stats.record("emptiness"):
        return not all(in_radical(p, a) for p in g.basis)


def gcd_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two parameter polynomials, via ``lcm = <t f, (1-t) g> ∩ Q[A]``."""
    if f.is_zero() and g.is_zero():
        raise UsageError("gcd of two zero polynomials")
    _require_pure_a(f, "gcd_poly")
    _require_pure_a(g, "gcd_poly")
    ring = f.ring
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return Polynomial.constant(ring, 1)
    if f.monic() == g.monic():
        return f.monic()
    S = _tag_ring(ring)
    t = Polynomial.var(S, S.variables[0])
    F, G = f.embed(S), g.embed(S)
    B = reduced_groebner_basis([t * F, (1 - t) * G], S)
    lcm = [b for b in B if b.degree_in(S.variables[0]) <= 0]
    if len(lcm) != 1:
        raise AssertionError("lcm ideal of two principal ideals must be principal")
    return divide_exact(f * g, lcm[0].embed(ring)).monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """``f / gcd(f, df/da_1, ..., df/da_n)``, made monic."""
    if f.is_zero():
        raise UsageError("squarefree_part of the zero polynomial")
    _require_pure_a(f, "squarefree_part")
    ring = f.ring
    with stats.record("sqfr"):
        if f.is_constant():
            return Polynomial.constant(ring, 1)
        if len(f.terms) == 1:
            pp = tuple(min(e, 1) for e in f.terms[0][0])
            return Polynomial.monomial(ring, pp)
        if f.total_degree() == 1:
            return f.monic()
        g = f
        for name in ring.parameters:
            if f.degree_in(name) <= 0:
                continue
            g = gcd_poly(g, partial_derivative(f, name))
            if g.is_constant():
                return f.monic()
        return divide_exact(f, g).monic()


def squarefree_ideal(a: IdealHandle) -> IdealHandle:
    """Same zero set, every generator replaced by its squarefree part."""
    if a.squarefree:
        return a
    gens = list(dict.fromkeys(squarefree_part(g) for g in a.generators))
    out = IdealHandle(a.ring, gens)
    out.squarefree = True
    return out


def dimension(a: IdealHandle) -> int:
    """Krull dimension of ``Q[A]/a``; -1 for the unit ideal."""
    if a._dimension is not None:
        return a._dimension
    ring = a.ring
    basis = a.basis
    if not basis:
        d = ring.n_a
    elif a.is_unit():
        d = -1
    else:
        nx = ring.n_x
        supports = [frozenset(i for i, e in enumerate(g.lpp[nx:]) if e) for g in basis]
        d = 0
        for size in range(ring.n_a, 0, -1):
            if any(not any(s <= set(S) for s in supports)
                   for S in combinations(range(ring.n_a), size)):
                d = size
                break
    a._dimension = d
    return d


def ideal_product(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    if a.ring != b.ring:
        raise UsageError("ideals belong to different rings")
    return IdealHandle(a.ring, list(dict.fromkeys(f * g for f in a.generators for g in b.generators)))


def minimalize(ideals: Sequence[IdealHandle]) -> list[IdealHandle]:
    """Inclusion-minimal members of ``ideals``; equal ideals are kept once."""
    kept: list[IdealHandle] = []
    for cand in ideals:
        if any(ideal_contains(cand, k) for k in kept):
            continue
        kept = [k for k in kept if not ideal_contains(k, cand)]
        kept.append(cand)
    return kept
