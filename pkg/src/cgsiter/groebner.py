"""Division, S-polynomials and Buchberger's algorithm.

The ordering is always the one carried by the polynomials' ring.  Inside
the Buchberger loop polynomials are kept fraction-free: integer coefficients
with content 1.  Only the final inter-reduced basis is turned back into monic
rational polynomials.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from . import stats
from .algebra import PowerProduct, RingSpec
from .errors import UsageError
from .polynomial import Polynomial, primitive_int_terms

# an internal basis element: (lpp, lc, {pp: int})
Entry = tuple


def _divides(s: PowerProduct, t: PowerProduct) -> bool:
    """t | s"""
    for a, b in zip(s, t):
        if b > a:
            return False
    return True


def _entry(terms: dict, ordering) -> Entry:
    lpp = min(terms, key=ordering.rkey)
    return (lpp, terms[lpp], terms)


def _primitive(d: dict) -> dict:
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return d
    if g in (0, 1):
        return d
    return {k: v // g for k, v in d.items()}


def _nf_int(terms: dict, reducers: Sequence[Entry], ordering, full: bool = True) -> dict:
    """Fraction-free normal form; returns a primitive integer multiple of the remainder."""
    if not terms or not reducers:
        return _primitive(dict(terms))
    rkey = ordering.rkey
    p = dict(terms)
    rem: dict = {}
    heap = [(rkey(pp), pp) for pp in p]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, pp = heapq.heappop(heap)
        c = p.get(pp)
        if not c:
            continue
        for glpp, glc, gterms in reducers:
            if _divides(pp, glpp):
                break
        else:
            rem[pp] = c
            del p[pp]
            if not full:
                rem.update(p)
                return _primitive(rem)
            continue
        m = tuple(a - b for a, b in zip(pp, glpp))
        g = gcd(c, glc)
        a, b = glc // g, c // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for k in p:
                p[k] *= a
            for k in rem:
                rem[k] *= a
        for q, gc in gterms.items():
            mq = tuple(x + y for x, y in zip(q, m))
            v = p.get(mq, 0) - b * gc
            if v:
                if mq not in p:
                    heapq.heappush(heap, (rkey(mq), mq))
                p[mq] = v
            else:
                p.pop(mq, None)
        steps += 1
        if a != 1 and steps % 8 == 0:
            g = 0
            for v in p.values():
                g = gcd(g, v)
            for v in rem.values():
                g = gcd(g, v)
            if g > 1:
                p = {k: v // g for k, v in p.items()}
                rem = {k: v // g for k, v in rem.items()}
    return _primitive(rem)


def _spoly_int(f: Entry, g: Entry) -> dict:
    (fl, fc, ft), (gl, gc, gt) = f, g
    lcm = tuple(max(a, b) for a, b in zip(fl, gl))
    mf = tuple(a - b for a, b in zip(lcm, fl))
    mg = tuple(a - b for a, b in zip(lcm, gl))
    k = gcd(fc, gc)
    af, ag = gc // k, fc // k
    out: dict = {}
    for pp, c in ft.items():
        q = tuple(x + y for x, y in zip(pp, mf))
        out[q] = out.get(q, 0) + af * c
    for pp, c in gt.items():
        q = tuple(x + y for x, y in zip(pp, mg))
        v = out.get(q, 0) - ag * c
        if v:
            out[q] = v
        else:
            out.pop(q, None)
    return {k2: v for k2, v in out.items() if v}


def _lcm(s: PowerProduct, t: PowerProduct) -> PowerProduct:
    return tuple(max(a, b) for a, b in zip(s, t))


def _coprime(s: PowerProduct, t: PowerProduct) -> bool:
    return not any(a and b for a, b in zip(s, t))


def _buchberger(polys: list[dict], ordering) -> list[Entry]:
    """Return a minimal (not yet inter-reduced) Groebner basis as entries."""
    store: list[Entry] = []
    basis: list[int] = []          # indices into store, the current G
    pairs: list[tuple] = []        # (sort key, i, j, lcm)
    key = ordering.key

    def reducers() -> list[Entry]:
        return sorted((store[i] for i in basis), key=lambda e: key(e[0]))

    def update(h: int) -> None:
        nonlocal basis, pairs
        hl = store[h][0]
        cand = [(g, _lcm(hl, store[g][0])) for g in basis]
        keep = []
        for idx, (g, L) in enumerate(cand):
            if _coprime(hl, store[g][0]):
                keep.append((g, L))
                continue
            others = [L2 for _, L2 in cand[idx + 1:]] + [L2 for _, L2 in keep]
            if not any(_divides(L, L2) for L2 in others):
                keep.append((g, L))
        new_pairs = [(g, L) for g, L in keep if not _coprime(hl, store[g][0])]
        old = []
        for item in pairs:
            _, i, j, L = item
            if (_divides(L, hl) and _lcm(store[i][0], hl) != L
                    and _lcm(store[j][0], hl) != L):
                continue
            old.append(item)
        for g, L in new_pairs:
            old.append(((key(L), g, h), g, h, L))
        pairs = old
        basis = [g for g in basis if not _divides(store[g][0], hl)] + [h]

    for f in sorted(polys, key=lambda d: key(min(d, key=ordering.rkey))):
        h = _nf_int(f, reducers(), ordering)
        if not h:
            continue
        e = _entry(h, ordering)
        if not any(e[0]):
            return [e]
        store.append(e)
        update(len(store) - 1)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: pairs[k][0])
        _, i, j, _ = pairs.pop(best)
        s = _spoly_int(store[i], store[j])
        if not s:
            continue
        h = _nf_int(s, reducers(), ordering)
        if not h:
            continue
        e = _entry(h, ordering)
        if not any(e[0]):
            return [e]
        store.append(e)
        update(len(store) - 1)
    return [store[i] for i in basis]


def _interreduce(entries: list[Entry], ordering) -> list[Entry]:
    key = ordering.key
    entries = sorted(entries, key=lambda e: key(e[0]))
    # drop non-minimal leading power products
    minimal: list[Entry] = []
    for e in entries:
        if not any(_divides(e[0], m[0]) for m in minimal):
            minimal.append(e)
    out = []
    for k, e in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        # leading term is irreducible by minimality, so only the tail moves
        h = _nf_int(e[2], others, ordering)
        out.append(_entry(h, ordering))
    return out


def _to_monic(ring: RingSpec, e: Entry) -> Polynomial:
    lc = Fraction(e[1])
    return Polynomial(ring, {pp: Fraction(c) / lc for pp, c in e[2].items()})


def _check_ring(polys: Iterable[Polynomial], ring: RingSpec | None = None) -> RingSpec | None:
    for p in polys:
        if ring is None:
            ring = p.ring
        elif p.ring != ring:
            raise UsageError("polynomials belong to different rings")
    return ring


def reduced_groebner_basis(gens: Sequence[Polynomial], ring: RingSpec | None = None) -> list[Polynomial]:
    """The unique reduced Groebner basis, monic and sorted by increasing LPP."""
    ring = _check_ring(gens, ring)
    polys = [primitive_int_terms(g) for g in gens if not g.is_zero()]
    if not polys:
        return []
    ordering = ring.ordering
    entries = _interreduce(_buchberger(polys, ordering), ordering)
    return [_to_monic(ring, e) for e in entries]


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Exact remainder of ``f`` on division by ``G``.

    Reducers are tried in increasing LPP order and the first one whose
    leading power product divides the current term is used.
    """
    ring = _check_ring(G, f.ring)
    if any(g.is_zero() for g in G):
        raise UsageError("normal_form divisors must be nonzero")
    ordering = ring.ordering
    reducers = sorted(((g.terms[0][0], g.terms[0][1], g.terms) for g in G),
                      key=lambda e: ordering.key(e[0]))
    rkey = ordering.rkey
    p = dict(f.terms)
    rem: dict = {}
    heap = [(rkey(pp), pp) for pp in p]
    heapq.heapify(heap)
    while heap:
        _, pp = heapq.heappop(heap)
        c = p.get(pp)
        if not c:
            continue
        for glpp, glc, gterms in reducers:
            if _divides(pp, glpp):
                break
        else:
            rem[pp] = c
            del p[pp]
            continue
        m = tuple(a - b for a, b in zip(pp, glpp))
        k = c / glc
        for q, gc in gterms:
            mq = tuple(x + y for x, y in zip(q, m))
            v = p.get(mq, 0) - k * gc
            if v:
                if mq not in p:
                    heapq.heappush(heap, (rkey(mq), mq))
                p[mq] = v
            else:
                p.pop(mq, None)
    return Polynomial._from_dict(ring, rem)


def reduces_to_zero(f: Polynomial, G: Sequence[Polynomial]) -> bool:
    """Membership-style test: does ``f`` have normal form 0 against ``G``?"""
    if f.is_zero():
        return True
    if not G:
        return False
    ordering = f.ring.ordering
    reducers = sorted((_entry(primitive_int_terms(g), ordering) for g in G),
                      key=lambda e: ordering.key(e[0]))
    return not _nf_int(primitive_int_terms(f), reducers, ordering)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/LM(f))*f - (L/LM(g))*g`` with ``L = lcm(LPP(f), LPP(g))``."""
    if f.is_zero() or g.is_zero():
        raise UsageError("s_polynomial of the zero polynomial")
    _check_ring([g], f.ring)
    (fl, fc), (gl, gc) = f.terms[0], g.terms[0]
    L = _lcm(fl, gl)
    mf = tuple(a - b for a, b in zip(L, fl))
    mg = tuple(a - b for a, b in zip(L, gl))
    return f.mul_term(mf, 1 / fc) - g.mul_term(mg, 1 / gc)


def is_groebner_basis(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to 0 modulo ``G``."""
    if any(g.is_zero() for g in G):
        raise UsageError("is_groebner_basis expects nonzero polynomials")
    if len(G) < 2:
        return True
    ring = _check_ring(G)
    ordering = ring.ordering
    entries = [_entry(primitive_int_terms(g), ordering) for g in G]
    reducers = sorted(entries, key=lambda e: ordering.key(e[0]))
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            s = _spoly_int(entries[i], entries[j])
            if s and _nf_int(s, reducers, ordering):
                return False
    return True


class IdealHandle:
    """An ideal given by generators, with its reduced basis computed on demand.

    The basis is computed at most once.  Ideals whose generators all live in
    the parameters report their basis computations as ``GB in K[A]``.
    """

    def __init__(self, ring: RingSpec, generators: Iterable[Polynomial] = ()) -> None:
        gens = tuple(g for g in generators if not g.is_zero())
        _check_ring(gens, ring)
        self.ring = ring
        self.generators = gens
        self._basis: tuple[Polynomial, ...] | None = None
        self._entries: list[Entry] | None = None
        self.squarefree = False
        self._dimension: int | None = None

    @classmethod
    def from_basis(cls, ring: RingSpec, basis: Sequence[Polynomial]) -> "IdealHandle":
        """Wrap a known reduced Groebner basis without recomputing it."""
        h = cls(ring, basis)
        h._basis = tuple(basis)
        return h

    @property
    def is_pure_a(self) -> bool:
        return all(g.is_pure_a() for g in self.generators)

    @property
    def basis(self) -> tuple[Polynomial, ...]:
        if self._basis is None:
            if self.is_pure_a:
                with stats.record("gb_a"):
                    self._basis = tuple(reduced_groebner_basis(self.generators, self.ring))
            else:
                self._basis = tuple(reduced_groebner_basis(self.generators, self.ring))
        return self._basis

    @property
    def has_basis(self) -> bool:
        return self._basis is not None

    def _reducers(self) -> list[Entry]:
        if self._entries is None:
            ordering = self.ring.ordering
            self._entries = [_entry(primitive_int_terms(g), ordering) for g in self.basis]
        return self._entries

    def is_unit(self) -> bool:
        b = self.basis
        return len(b) == 1 and b[0].is_constant()

    def is_zero(self) -> bool:
        return not self.generators

    def contains_poly(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        reducers = self._reducers()
        if not reducers:
            return False
        return not _nf_int(primitive_int_terms(f), reducers, self.ring.ordering)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.basis) if self.basis else f

    def __add__(self, other: "IdealHandle") -> "IdealHandle":
        if other.ring != self.ring:
            raise UsageError("ideals belong to different rings")
        return IdealHandle(self.ring, self.generators + other.generators)

    def same_basis(self, other: "IdealHandle") -> bool:
        return self.basis == other.basis

    def __repr__(self) -> str:
        from .polynomial import render
        return "<" + ", ".join(render(g) for g in self.generators) + ">" if self.generators else "<0>"
