"""Sparse multivariate polynomials over Q on a :class:`RingSpec`.

Terms are kept as a tuple of ``(power_product, Fraction)`` pairs in strictly
decreasing order under the ring's term ordering, with no zero coefficients.
Instances are immutable and hashable.

Text grammar (whitespace is ignored)::

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := ident ['^' nat] | rational | '(' poly ')' ['^' nat]
    rational := int ['/' nat]
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .algebra import PowerProduct, RingSpec
from .errors import ParseError, UsageError

Number = (int, Fraction)


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[PowerProduct, object] | Iterable = ()) -> None:
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            acc: dict = {}
            for pp, c in terms:
                acc[pp] = acc.get(pp, 0) + c
            items = acc.items()
        n = ring.nvars
        cleaned = []
        for pp, c in items:
            if len(pp) != n:
                raise UsageError(f"power product {pp} has wrong length for ring {ring.names}")
            if c:
                cleaned.append((tuple(pp), Fraction(c)))
        key = ring.ordering.key
        cleaned.sort(key=lambda t: key(t[0]), reverse=True)
        self.ring = ring
        self.terms = tuple(cleaned)
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: tuple) -> "Polynomial":
        # terms already sorted, nonzero, Fraction coefficients
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def _from_dict(cls, ring: RingSpec, d: dict) -> "Polynomial":
        key = ring.ordering.key
        items = sorted(((pp, c) for pp, c in d.items() if c), key=lambda t: key(t[0]), reverse=True)
        return cls._raw(ring, tuple(items))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls._raw(ring, ())

    @classmethod
    def constant(cls, ring: RingSpec, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(ring, ((ring.one(), c),) if c else ())

    @classmethod
    def monomial(cls, ring: RingSpec, pp: PowerProduct, c=1) -> "Polynomial":
        return cls(ring, {tuple(pp): c})

    @classmethod
    def var(cls, ring: RingSpec, name: str) -> "Polynomial":
        return cls._raw(ring, ((ring.generator(name), Fraction(1)),))

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def is_pure_a(self) -> bool:
        """True when no term involves a variable of X."""
        nx = self.ring.n_x
        return all(not any(pp[:nx]) for pp, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def lpp(self) -> PowerProduct:
        if not self.terms:
            raise UsageError("the zero polynomial has no leading power product")
        return self.terms[0][0]

    @property
    def lc(self) -> Fraction:
        if not self.terms:
            raise UsageError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def total_degree(self) -> int:
        return max((sum(pp) for pp, _ in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((pp[i] for pp, _ in self.terms), default=-1)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, Number):
            return self.terms == Polynomial.constant(self.ring, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise UsageError("polynomials belong to different rings")
            return other
        if isinstance(other, Number):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        d = dict(self.terms)
        for pp, c in other.terms:
            d[pp] = d.get(pp, 0) + c
        return Polynomial._from_dict(self.ring, d)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, tuple((pp, -c) for pp, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Number):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        d: dict = {}
        for p1, c1 in self.terms:
            for p2, c2 in other.terms:
                pp = tuple(a + b for a, b in zip(p1, p2))
                d[pp] = d.get(pp, 0) + c1 * c2
        return Polynomial._from_dict(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise UsageError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, tuple((pp, k * c) for pp, k in self.terms))

    def mul_term(self, pp: PowerProduct, c) -> "Polynomial":
        """Multiply by the single term ``c * pp``; order is preserved."""
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(
            self.ring, tuple((tuple(a + b for a, b in zip(q, pp)), k * c) for q, k in self.terms))

    def monic(self) -> "Polynomial":
        if not self.terms or self.terms[0][1] == 1:
            return self
        return self.scale(1 / self.terms[0][1])

    # -- ring-level operations ----------------------------------------------

    def evaluate_params(self, point: Sequence) -> "Polynomial":
        return evaluate_params(self, point)

    def value_at(self, point: Sequence) -> Fraction:
        """Evaluate a pure-parameter polynomial at ``point`` to a rational."""
        if not self.is_pure_a():
            raise UsageError("value_at needs a polynomial in the parameters only")
        f = evaluate_params(self, point)
        return f.terms[0][1] if f.terms else Fraction(0)

    def embed(self, ring: RingSpec) -> "Polynomial":
        """Map into ``ring`` by indeterminate name.

        Indeterminates absent from ``ring`` may be dropped only if they never
        occur in ``self``.
        """
        if ring == self.ring:
            return self
        target = set(ring.names)
        idx = [ring.index(n) if n in target else None for n in self.ring.names]
        d = {}
        for pp, c in self.terms:
            e = [0] * ring.nvars
            for i, k in zip(idx, pp):
                if i is not None:
                    e[i] = k
                elif k:
                    raise UsageError(f"cannot embed {render(self)} into ring {ring.names}")
            d[tuple(e)] = c
        return Polynomial._from_dict(ring, d)


# -- operations named after the contracts ----------------------------------

def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def subtract(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def scale(f: Polynomial, c) -> Polynomial:
    return f.scale(c)


def evaluate_params(f: Polynomial, point: Sequence) -> Polynomial:
    """Substitute ``point`` for the parameters; the result lives in Q[X]."""
    ring = f.ring
    if len(point) != ring.n_a:
        raise UsageError(f"point has {len(point)} entries, ring has {ring.n_a} parameters")
    nx = ring.n_x
    vals = [Fraction(v) for v in point]
    tail = (0,) * ring.n_a
    d: dict = {}
    for pp, c in f.terms:
        v = c
        for val, e in zip(vals, pp[nx:]):
            if e:
                v *= val ** e
                if not v:
                    break
        if v:
            key = pp[:nx] + tail
            d[key] = d.get(key, 0) + v
    return Polynomial._from_dict(ring, d)


def leading(f: Polynomial) -> tuple[PowerProduct, Fraction]:
    """``(LPP, LC)`` under the ring's full ordering."""
    if f.is_zero():
        raise UsageError("leading() of the zero polynomial")
    return f.terms[0]


def leading_x(f: Polynomial) -> tuple[PowerProduct, Polynomial]:
    """``(LPP_X, LC_X)``: leading power product in X and its coefficient in Q[A].

    LPP_X is returned as a full-length power product with zero parameter
    exponents; LC_X is a pure-parameter polynomial of the same ring.
    """
    if f.is_zero():
        raise UsageError("leading_x() of the zero polynomial")
    nx = f.ring.n_x
    head = f.terms[0][0][:nx]
    zeros = (0,) * nx
    coeff = tuple((zeros + pp[nx:], c) for pp, c in f.terms if pp[:nx] == head)
    # terms sharing an X part are contiguous and already ordered by the A block
    return head + (0,) * f.ring.n_a, Polynomial._raw(f.ring, coeff)


def partial_derivative(f: Polynomial, name: str) -> Polynomial:
    i = f.ring.index(name)
    d = {}
    for pp, c in f.terms:
        e = pp[i]
        if e:
            q = pp[:i] + (e - 1,) + pp[i + 1:]
            d[q] = c * e
    return Polynomial._from_dict(f.ring, d)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return ``q`` with ``f == q * g``; raise UsageError if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise UsageError("division by the zero polynomial")
    ring = f.ring
    key = ring.ordering.key
    glpp, glc = g.terms[0]
    rest = dict(f.terms)
    quotient: dict = {}
    while rest:
        lpp = max(rest, key=key)
        c = rest[lpp]
        q = tuple(a - b for a, b in zip(lpp, glpp))
        if any(e < 0 for e in q):
            raise UsageError(f"{render(g)} does not divide {render(f)}")
        k = c / glc
        quotient[q] = k
        for pp, cg in g.terms:
            m = tuple(a + b for a, b in zip(pp, q))
            v = rest.get(m, 0) - k * cg
            if v:
                rest[m] = v
            else:
                rest.pop(m, None)
    return Polynomial._from_dict(ring, quotient)


def primitive_int_terms(f: Polynomial) -> dict:
    """Integer coefficients of a rational multiple of ``f`` with content 1 and positive LC."""
    if f.is_zero():
        return {}
    den = lcm(*(c.denominator for _, c in f.terms))
    ints = {pp: c.numerator * (den // c.denominator) for pp, c in f.terms}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if f.terms[0][1] < 0:
        g = -g
    return {pp: v // g for pp, v in ints.items()}


# -- rendering ---------------------------------------------------------------

def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_monomial(ring: RingSpec, pp: PowerProduct) -> str:
    # parameters print before variables, mirroring the "coefficient times
    # power product" reading of K[A][X]
    nx = ring.n_x
    order = list(range(nx, ring.nvars)) + list(range(nx))
    parts = []
    for i in order:
        e = pp[i]
        if e == 1:
            parts.append(ring.names[i])
        elif e > 1:
            parts.append(f"{ring.names[i]}^{e}")
    return "*".join(parts)


def render(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for k, (pp, c) in enumerate(f.terms):
        mono = _fmt_monomial(f.ring, pp)
        a = abs(c)
        if not mono:
            body = _fmt_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_rational(a)}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingSpec) -> None:
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        p = self.poly()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def poly(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        result = self.term().scale(sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                result = result * self.factor()
            else:
                return result

    def nat(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected a natural number, found {val or 'end of input'!r}", pos)
        return int(val)

    def power(self, base: Polynomial) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            return base ** self.nat()
        return base

    def factor(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "ident":
            if val not in self.ring.names:
                raise ParseError(f"unknown identifier {val!r}", pos)
            return self.power(Polynomial.var(self.ring, val))
        if kind == "int":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                dpos = self.peek()[2]
                den = self.nat()
                if den == 0:
                    raise ParseError("zero denominator", dpos)
                return Polynomial.constant(self.ring, Fraction(num, den))
            return Polynomial.constant(self.ring, num)
        if kind == "op" and val == "(":
            inner = self.poly()
            self.expect(")")
            return self.power(inner)
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str, ring: RingSpec) -> Polynomial:
    return _Parser(text, ring).parse()
