"""Rings, power products and block elimination term orderings.

A power product is a plain tuple of non-negative exponents laid out as
``(x_1, ..., x_nx, a_1, ..., a_na)``: the variables first, then the
parameters.  Every comparison goes through a :class:`TermOrdering`, which
compares the X block first and uses the A block only as a tie-break, so any
power product living purely in the parameters sits below every power product
that involves a variable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .errors import UsageError

PowerProduct = Tuple[int, ...]
Rational = Fraction

ORDER_KINDS = ("lex", "degrevlex")

LESS, EQUAL, GREATER = -1, 0, 1


def _block_key(order: str, exps: PowerProduct) -> tuple:
    if order == "lex":
        return exps
    # degrevlex: higher degree wins, then the smaller exponent in the last
    # indeterminate wins
    return (sum(exps),) + tuple(-e for e in reversed(exps))


@dataclass(frozen=True)
class TermOrdering:
    """Block ordering on ``n_x + n_a`` indeterminates, X block dominant."""

    n_x: int
    n_a: int
    order_x: str = "lex"
    order_a: str = "degrevlex"
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        for kind in (self.order_x, self.order_a):
            if kind not in ORDER_KINDS:
                raise UsageError(f"unknown block order {kind!r}; expected one of {ORDER_KINDS}")
        if self.n_x < 0 or self.n_a < 0:
            raise UsageError("block sizes must be non-negative")

    def key(self, pp: PowerProduct) -> tuple:
        """Sort key: ``key(s) < key(t)`` iff ``s < t`` in this ordering."""
        k = self._cache.get(pp)
        if k is None:
            if len(pp) != self.n_x + self.n_a:
                raise UsageError(f"power product {pp} does not belong to this ring")
            k = _block_key(self.order_x, pp[: self.n_x]) + _block_key(self.order_a, pp[self.n_x:])
            self._cache[pp] = k
        return k

    def rkey(self, pp: PowerProduct) -> tuple:
        """Reversed key: the largest power product gets the smallest key (for heaps)."""
        k = self._cache.get((None, pp))
        if k is None:
            k = tuple(-v for v in self.key(pp))
            self._cache[(None, pp)] = k
        return k

    def compare(self, s: PowerProduct, t: PowerProduct) -> int:
        ks, kt = self.key(s), self.key(t)
        if ks < kt:
            return LESS
        return GREATER if ks > kt else EQUAL

    def x_part(self, pp: PowerProduct) -> PowerProduct:
        return pp[: self.n_x] + (0,) * self.n_a

    def a_part(self, pp: PowerProduct) -> PowerProduct:
        return (0,) * self.n_x + pp[self.n_x:]


@dataclass(frozen=True)
class RingSpec:
    """The polynomial ring ``Q[A, X]`` with its block ordering."""

    variables: tuple[str, ...]
    parameters: tuple[str, ...] = ()
    order_x: str = "lex"
    order_a: str = "degrevlex"

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "parameters", tuple(self.parameters))
        if not self.variables:
            raise UsageError("a ring needs at least one variable")
        names = self.variables + self.parameters
        if len(set(names)) != len(names):
            raise UsageError(f"indeterminate names must be distinct: {names}")
        object.__setattr__(self, "ordering",
                           TermOrdering(len(self.variables), len(self.parameters),
                                        self.order_x, self.order_a))

    ordering: TermOrdering = field(init=False, compare=False, repr=False)

    @property
    def n_x(self) -> int:
        return len(self.variables)

    @property
    def n_a(self) -> int:
        return len(self.parameters)

    @property
    def names(self) -> tuple[str, ...]:
        return self.variables + self.parameters

    @property
    def nvars(self) -> int:
        return len(self.variables) + len(self.parameters)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UsageError(f"unknown indeterminate {name!r}") from None

    def one(self) -> PowerProduct:
        return (0,) * self.nvars

    def generator(self, name: str) -> PowerProduct:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return tuple(exps)

    def fresh_name(self, base: str = "t") -> str:
        name, k = base, 0
        while name in self.names:
            k += 1
            name = f"{base}{k}"
        return name

    def is_pure_a(self, pp: PowerProduct) -> bool:
        return not any(pp[: self.n_x])


def _check_same(s: PowerProduct, t: PowerProduct) -> None:
    if len(s) != len(t):
        raise UsageError(f"power products {s} and {t} come from different rings")


def compare(ordering: TermOrdering, s: PowerProduct, t: PowerProduct) -> int:
    """Return LESS, EQUAL or GREATER (-1, 0, 1) comparing ``s`` with ``t``."""
    _check_same(s, t)
    return ordering.compare(s, t)


def pp_multiply(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    _check_same(s, t)
    return tuple(a + b for a, b in zip(s, t))


def pp_divides(s: PowerProduct, t: PowerProduct) -> bool:
    """True iff ``t`` divides ``s``."""
    _check_same(s, t)
    return all(b <= a for a, b in zip(s, t))


def pp_lcm(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    _check_same(s, t)
    return tuple(max(a, b) for a, b in zip(s, t))


def pp_quotient(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    """``s / t``; ``t`` must divide ``s``."""
    _check_same(s, t)
    q = tuple(a - b for a, b in zip(s, t))
    if any(e < 0 for e in q):
        raise UsageError(f"{t} does not divide {s}")
    return q


def pp_degree(s: PowerProduct) -> int:
    return sum(s)
