"""Buchberger's algorithm, normal forms, and reduced Groebner bases.

Pair selection follows the normal strategy (smallest lcm degree first) with
the coprime and chain criteria.  Over QQ all intermediate polynomials are
kept primitive (integer coefficients, content 1) to bound growth; output
bases are monic and auto-reduced, hence canonical for a fixed order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import ResourceLimitError, RingMismatchError
from .poly import Polynomial
from .ring import (
    Ring,
    TermOrder,
    grevlex,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

#: Abort any single basis computation after this many S-pairs.
DEFAULT_PAIR_LIMIT = 50_000


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: TermOrder
    polys: tuple[Polynomial, ...]  # reduced, monic, sorted by leading monomial

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [p.leading(self.order)[0] for p in self.polys]

    def contains_one(self) -> bool:
        return any(p.is_constant() and not p.is_zero() for p in self.polys)


def _reduce_terms(terms: dict, reducers, key, field) -> dict:
    """Full normal form of a term dict against (lt, lc, terms) reducers."""
    work = dict(terms)
    rem: dict = {}
    zero = field.zero()
    sub, mul, div = field.sub, field.mul, field.div
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lt, lc, gterms in reducers:
            if monomial_divides(lt, m):
                q = monomial_div(m, lt)
                factor = div(c, lc)
                for ge, gc in gterms.items():
                    if ge == lt:
                        continue
                    e2 = monomial_mul(q, ge)
                    cur = sub(work.get(e2, zero), mul(factor, gc))
                    if cur:
                        work[e2] = cur
                    else:
                        work.pop(e2, None)
                break
        else:
            rem[m] = c
    return rem


def _as_reducers(polys, order):
    reducers = []
    for g in polys:
        lt, lc = g.leading(order)
        reducers.append((lt, lc, g.terms))
    return reducers


def normal_form(p: Polynomial, basis, order: TermOrder | None = None) -> Polynomial:
    """Remainder of ``p`` modulo a basis; unique when the basis is Groebner."""
    if isinstance(basis, GroebnerBasis):
        if order is not None and order != basis.order:
            raise RingMismatchError("normal form requested under a different order than the basis")
        order = basis.order
        polys = basis.polys
    else:
        polys = tuple(basis)
        order = order or grevlex()
    if not polys:
        return p
    ring = polys[0].ring
    if p.ring != ring:
        raise RingMismatchError(f"ring mismatch: {p.ring} vs {ring}")
    key = order.sort_key(ring.weights)
    rem = _reduce_terms(p.terms, _as_reducers(polys, order), key, ring.field)
    return Polynomial(ring, rem)


def s_poly(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    ltf, lcf = f.leading(order)
    ltg, lcg = g.leading(order)
    lcm = monomial_lcm(ltf, ltg)
    a = f.shift(monomial_div(lcm, ltf), f.ring.field.inv(lcf))
    b = g.shift(monomial_div(lcm, ltg), g.ring.field.inv(lcg))
    return a - b


def buchberger(
    gens,
    order: TermOrder | None = None,
    *,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("cannot infer ring from an empty generator list; use an IdealHandle")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators live in different rings")
    order = order or grevlex()
    key = order.sort_key(ring.weights)
    field = ring.field

    basis: list[Polynomial] = []
    lts: list[tuple[int, ...]] = []
    heap: list[tuple[int, int, int]] = []
    pending: set[tuple[int, int]] = set()

    def add_poly(p: Polynomial):
        p = p.primitive(order)
        i = len(basis)
        basis.append(p)
        lts.append(p.leading(order)[0])
        for j in range(i):
            heapq.heappush(heap, (ring.wdeg(monomial_lcm(lts[i], lts[j])), j, i))
            pending.add((j, i))

    seen = set()
    for g in sorted(gens, key=lambda g: key(g.leading(order)[0])):
        k = g.primitive(order).key()
        if k not in seen:
            seen.add(k)
            add_poly(g)

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > pair_limit:
            raise ResourceLimitError(f"Groebner pair ceiling {pair_limit} exceeded")
        lcm = monomial_lcm(lts[i], lts[j])
        if lcm == monomial_mul(lts[i], lts[j]):
            continue  # coprime leading terms
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lts[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                skip = True  # chain criterion
                break
        if skip:
            continue
        s = s_poly(basis[i], basis[j], order)
        rem = _reduce_terms(s.terms, _as_reducers(basis, order), key, field)
        if rem:
            add_poly(Polynomial(ring, rem))

    return GroebnerBasis(ring, order, tuple(_autoreduce(basis, order, ring)))


def _autoreduce(basis: list[Polynomial], order: TermOrder, ring: Ring) -> list[Polynomial]:
    key = order.sort_key(ring.weights)
    # drop elements whose leading term another leading term divides
    basis = sorted((p for p in basis if not p.is_zero()), key=lambda p: key(p.leading(order)[0]))
    kept: list[Polynomial] = []
    lts = [p.leading(order)[0] for p in basis]
    for i, p in enumerate(basis):
        if any(j != i and monomial_divides(lts[j], lts[i]) and (ring.wdeg(lts[j]), j) < (ring.wdeg(lts[i]), i)
               for j in range(len(basis))):
            continue
        kept.append(p)
    # tail-reduce every element against the others until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            if not others:
                continue
            r = normal_form(kept[i], others, order)
            if r.terms != kept[i].terms:
                changed = True
                if r.is_zero():
                    kept.pop(i)
                    break
                kept[i] = r.primitive(order)
    return sorted((p.monic(order) for p in kept), key=lambda p: key(p.leading(order)[0]))
