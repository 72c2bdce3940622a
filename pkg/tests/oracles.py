"""Independent reference computations used to freeze expected values.

None of these go through the Buchberger engine under test except where a
check is explicitly about cross-validating one engine route with another.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import sympy as sp

from cgsiter.algebra import RingSpec
from cgsiter.polynomial import Polynomial


def to_sympy(f: Polynomial):
    syms = sp.symbols(f.ring.names)
    return sum((sp.Rational(c.numerator, c.denominator)
                * sp.Mul(*[s ** e for s, e in zip(syms, pp)]) for pp, c in f.terms), sp.Integer(0))


def sympy_reduced_basis(F: list[Polynomial], ring: RingSpec) -> list[str]:
    """Reduced lex basis from sympy, as sorted canonical strings (lex/lex rings only)."""
    assert ring.order_x == "lex" and (ring.n_a == 0 or ring.order_a == "lex")
    syms = sp.symbols(ring.names)
    G = sp.groebner([to_sympy(f) for f in F], *syms, order="lex", domain="QQ")
    return sorted(str(sp.expand(g)) for g in G.exprs)


def as_sorted_strings(G: list[Polynomial]) -> list[str]:
    return sorted(str(sp.expand(to_sympy(g))) for g in G)


def monomials_up_to(n: int, degree: int):
    return [e for e in product(range(degree + 1), repeat=n) if sum(e) <= degree]


def random_poly(rng: random.Random, ring: RingSpec, degree: int, nterms: int,
                coeffs=(-3, -2, -1, 1, 2, 3)) -> Polynomial:
    monos = monomials_up_to(ring.nvars, degree)
    return Polynomial(ring, {rng.choice(monos): rng.choice(coeffs) for _ in range(nterms)})


def random_parametric(rng: random.Random, ring: RingSpec, degree: int = 2, ngens: int = 2,
                      nterms: int = 3) -> list[Polynomial]:
    """Generators each involving at least one variable."""
    monos = monomials_up_to(ring.nvars, degree)
    with_x = [m for m in monos if any(m[: ring.n_x])]
    out = []
    for _ in range(ngens):
        terms = {rng.choice(with_x): rng.choice((1, -1, 2, -2, 3))}
        for _ in range(nterms - 1):
            terms[rng.choice(monos)] = rng.choice((1, -1, 2, -3))
        out.append(Polynomial(ring, terms))
    return out


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                k = rows[i][col] / p[col]
                rows[i] = [a - k * b for a, b in zip(rows[i], p)]
        rank += 1
    return rank


def in_span_of_multiples(f: Polynomial, F: list[Polynomial], degree: int) -> bool:
    """Linear-algebra membership: is f a Q-combination of m*g, deg(m*g) <= degree?

    Sound for membership (True means f is in the ideal); a False only says no
    certificate exists within the degree bound.
    """
    n = f.ring.nvars
    rows = []
    for g in F:
        dg = g.total_degree()
        for m in monomials_up_to(n, degree - dg):
            rows.append(g.mul_term(m, 1))
    cols = sorted({pp for r in rows + [f] for pp, _ in r.terms})
    index = {pp: i for i, pp in enumerate(cols)}

    def vec(p):
        v = [Fraction(0)] * len(cols)
        for pp, c in p.terms:
            v[index[pp]] = c
        return v

    base = [vec(r) for r in rows]
    return _rank(base) == _rank(base + [vec(f)])


def brute_radical(f: Polynomial, gens: list[Polynomial], bound: int = 6) -> bool:
    """Exists k <= bound with f^k in <gens>; membership by normal form of the power."""
    from cgsiter.groebner import normal_form, reduced_groebner_basis
    G = reduced_groebner_basis(gens, f.ring)
    power = Polynomial.constant(f.ring, 1)
    for _ in range(bound):
        power = power * f
        if normal_form(power, G).is_zero():
            return True
    return False
