"""Ideal arithmetic and the exact invariants of graded quotients.

An IdealHandle memoizes one reduced Groebner basis per term order, so the
colon/intersection chains built by the filtration machinery reuse bases
heavily.  Every length computation goes through exact Hilbert-series
differences; nothing is ever approximated.
"""

from __future__ import annotations

import hashlib
from itertools import combinations_with_replacement

from .errors import (
    ContainmentError,
    InfiniteLengthError,
    NotHomogeneousError,
    ResourceLimitError,
    RingMismatchError,
)
from .groebner import GroebnerBasis, buchberger, normal_form
from .poly import Polynomial
from .ring import Ring, TermOrder, block, grevlex
from .series import GradedHilbert, monomial_numerator, to_coeff_list, zp_sub

SATURATION_LIMIT = 100


class IdealHandle:
    """Generator list plus cached reduced bases per term order."""

    __slots__ = ("ring", "gens", "_gb", "_series", "_homog", "_fingerprint")

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        seen = set()
        kept = []
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator outside the handle's ring")
            if g.is_zero():
                continue
            k = g.key()
            if k not in seen:
                seen.add(k)
                kept.append(g)
        self.gens = tuple(kept)
        self._gb: dict[str, GroebnerBasis] = {}
        self._series: GradedHilbert | None = None
        self._homog: bool | None = None
        self._fingerprint: str | None = None

    def groebner(self, order: TermOrder | None = None) -> GroebnerBasis:
        order = order or grevlex()
        key = order.cache_key()
        gb = self._gb.get(key)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis(self.ring, order, ())
            else:
                gb = buchberger(self.gens, order)
            self._gb[key] = gb
        return gb

    def contains(self, p: Polynomial) -> bool:
        if p.is_zero():
            return True
        return normal_form(p, self.groebner()).is_zero()

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return bool(self.gens) and self.groebner().contains_one()

    @property
    def homogeneous(self) -> bool:
        if self._homog is None:
            self._homog = all(g.is_homogeneous() for g in self.gens)
        return self._homog

    @property
    def fingerprint(self) -> str:
        if self._fingerprint is None:
            blob = repr((str(self.ring), sorted(g.key() for g in self.gens)))
            self._fingerprint = hashlib.sha256(blob.encode()).hexdigest()[:16]
        return self._fingerprint

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"<({inside}) in {self.ring}>"


def ideal(ring: Ring, gens) -> IdealHandle:
    return IdealHandle(ring, list(gens))


def unit_ideal(ring: Ring) -> IdealHandle:
    return IdealHandle(ring, [Polynomial.constant(ring, 1)])


def zero_ideal(ring: Ring) -> IdealHandle:
    return IdealHandle(ring, [])


def maximal_ideal(ring: Ring) -> IdealHandle:
    return IdealHandle(ring, [Polynomial.variable(ring, i) for i in range(ring.nvars)])


def _check_pair(a: IdealHandle, b: IdealHandle):
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")


def ideal_sum(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    _check_pair(a, b)
    return IdealHandle(a.ring, list(a.gens) + list(b.gens))


def ideal_product(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    _check_pair(a, b)
    return IdealHandle(a.ring, [f * g for f in a.gens for g in b.gens])


def ideal_power(a: IdealHandle, n: int) -> IdealHandle:
    if n < 0:
        raise ValueError("negative ideal power")
    if n == 0:
        return unit_ideal(a.ring)
    gens = []
    for combo in combinations_with_replacement(a.gens, n):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        gens.append(p)
    return IdealHandle(a.ring, gens)


def ideal_equal(a: IdealHandle, b: IdealHandle) -> bool:
    _check_pair(a, b)
    ga = a.groebner().polys
    gb = b.groebner().polys
    return len(ga) == len(gb) and all(x == y for x, y in zip(ga, gb))


def ideal_contains(a: IdealHandle, b: IdealHandle) -> bool:
    """True when b is a subset of a (every generator of b lies in a)."""
    _check_pair(a, b)
    return all(a.contains(g) for g in b.gens)


def eliminate(a: IdealHandle, k: int, target: Ring | None = None) -> IdealHandle:
    """Intersection with the subring omitting the first k variables."""
    ring = a.ring
    if not 0 < k < ring.nvars:
        raise ValueError("eliminate needs 0 < k < number of variables")
    if target is None:
        target = Ring(ring.field, ring.names[k:], ring.weights[k:])
    gb = a.groebner(block(k))
    kept = []
    for p in gb.polys:
        if all(all(e == 0 for e in exps[:k]) for exps in p.terms):
            kept.append(Polynomial(target, {exps[k:]: c for exps, c in p.terms.items()}))
    return IdealHandle(target, kept)


def ideal_intersection(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    _check_pair(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(a.ring)
    if a.is_unit():
        return IdealHandle(b.ring, list(b.gens))
    if b.is_unit():
        return IdealHandle(a.ring, list(a.gens))
    ring = a.ring
    wname = "_w"
    while wname in ring.names:
        wname += "_"
    aux = Ring(ring.field, (wname,) + ring.names, (1,) + ring.weights)

    def lift(p: Polynomial, mul_w: bool, one_minus_w: bool) -> Polynomial:
        terms = {}
        for e, c in p.terms.items():
            terms[(1 if mul_w else 0,) + e] = c
        q = Polynomial(aux, terms)
        if one_minus_w:
            terms0 = {(0,) + e: c for e, c in p.terms.items()}
            q = Polynomial(aux, terms0) - q
        return q

    gens = [lift(g, True, False) for g in a.gens] + [lift(g, True, True) for g in b.gens]
    return eliminate(IdealHandle(aux, gens), 1, target=ring)


def ideal_op(a: IdealHandle, b: IdealHandle, op: str) -> IdealHandle:
    if op == "sum":
        return ideal_sum(a, b)
    if op == "product":
        return ideal_product(a, b)
    if op == "intersection":
        return ideal_intersection(a, b)
    raise ValueError(f"unknown ideal op {op!r}")


def ideal_quotient(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """a : b, computed as the intersection of a : g over generators g."""
    _check_pair(a, b)
    if not b.gens:
        raise ValueError("colon by the zero ideal is rejected")
    result: IdealHandle | None = None
    for g in b.gens:
        single = _quotient_by_element(a, g)
        result = single if result is None else ideal_intersection(result, single)
        if result.is_zero():
            break
    return result


def _quotient_by_element(a: IdealHandle, g: Polynomial) -> IdealHandle:
    if g.is_zero():
        raise ValueError("colon by zero is rejected")
    if a.is_zero():
        return zero_ideal(a.ring)
    meet = ideal_intersection(a, IdealHandle(a.ring, [g]))
    return IdealHandle(a.ring, [p.divide_exact(g) for p in meet.gens])


def saturation(a: IdealHandle, b: IdealHandle) -> IdealHandle:
    """a : b^infinity, by iterating the colon until it stabilizes."""
    current = a
    for _ in range(SATURATION_LIMIT):
        nxt = ideal_quotient(current, b)
        if ideal_equal(nxt, current):
            return current
        current = nxt
    raise ResourceLimitError(f"saturation did not stabilize within {SATURATION_LIMIT} steps")


def krull_dim(a: IdealHandle) -> int:
    """Dimension of R/a via maximal independent variable sets; -1 for the
    unit ideal."""
    gb = a.groebner()
    if gb.contains_one():
        return -1
    n = a.ring.nvars
    lms = gb.leading_exponents()
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        vars_in = frozenset(i for i in range(n) if mask >> i & 1)
        if all(not s <= vars_in for s in supports):
            best = size
    return best


def hilbert_series(a: IdealHandle) -> GradedHilbert:
    """Exact Hilbert series of R/a for homogeneous a."""
    if a._series is not None:
        return a._series
    if not a.homogeneous:
        raise NotHomogeneousError("Hilbert series needs a homogeneous ideal")
    gb = a.groebner()
    degs = [(w,) for w in a.ring.weights]
    num = monomial_numerator(gb.leading_exponents(), degs)
    a._series = GradedHilbert(to_coeff_list(num), a.ring.weights)
    return a._series


def colength(inner: IdealHandle, outer: IdealHandle) -> int:
    """Length of outer/inner inside R/inner, for inner contained in outer.

    Computed as the exact series difference; a non-polynomial difference
    means the quotient has infinite length.
    """
    _check_pair(inner, outer)
    if not ideal_contains(outer, inner):
        raise ContainmentError("colength: the first ideal is not contained in the second")
    diffs = colength_slices(inner, outer)
    return sum(diffs)


def colength_slices(inner: IdealHandle, outer: IdealHandle) -> list[int]:
    """Degreewise dimensions of outer/inner (a polynomial's coefficients)."""
    if not inner.homogeneous or not outer.homogeneous:
        raise NotHomogeneousError("colength needs homogeneous ideals")
    ni = {(k,): c for k, c in enumerate(hilbert_series(inner).numerator) if c}
    no = {(k,): c for k, c in enumerate(hilbert_series(outer).numerator) if c}
    diff = zp_sub(ni, no)
    for w in inner.ring.weights:
        try:
            diff = _divide_univariate(diff, w)
        except InfiniteLengthError:
            raise InfiniteLengthError("colength is infinite (dimension mismatch)") from None
    out = to_coeff_list(diff)
    if any(c < 0 for c in out):
        raise ContainmentError("negative degreewise difference; containment check was fooled")
    return out


def _divide_univariate(poly: dict, w: int) -> dict:
    from .series import zp_divide_one_minus

    return zp_divide_one_minus(poly, (w,))
