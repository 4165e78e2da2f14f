"""Exact integer arithmetic for Hilbert-series numerators.

Polynomials in one or two grading variables are dicts mapping exponent
tuples to nonzero ints.  The numerator of a monomial quotient is computed by
the standard pivot recursion: pick a variable in a minimal generator and
split along ideal+variable / ideal:variable.
"""

from __future__ import annotations

from math import comb

from .errors import InfiniteLengthError

IntPoly = dict  # tuple[int, ...] -> int


def zp_zero() -> IntPoly:
    return {}


def zp_one(grading: int) -> IntPoly:
    return {(0,) * grading: 1}


def zp_add(a: IntPoly, b: IntPoly) -> IntPoly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def zp_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return zp_add(a, {e: -c for e, c in b.items()})


def zp_shift(a: IntPoly, exps: tuple[int, ...], c: int = 1) -> IntPoly:
    return {tuple(x + y for x, y in zip(e, exps)): v * c for e, v in a.items()}


def zp_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def zp_divide_one_minus(a: IntPoly, step: tuple[int, ...]) -> IntPoly:
    """Exact quotient a / (1 - z^step); raises InfiniteLengthError otherwise.

    Processes minimal terms first: the minimal term of the quotient equals
    the minimal term of the dividend, so repeatedly strip it.
    """
    if not a:
        return {}
    bound = max(sum(e) for e in a) + 1
    work = dict(a)
    quot: IntPoly = {}
    while work:
        e = min(work, key=lambda t: (sum(t), t))
        if sum(e) >= bound:
            raise InfiniteLengthError("series quotient is not a polynomial")
        c = work.pop(e)
        quot[e] = quot.get(e, 0) + c
        e2 = tuple(x + y for x, y in zip(e, step))
        v = work.get(e2, 0) + c
        if v:
            work[e2] = v
        else:
            work.pop(e2, None)
    return quot


def zp_collapse_first(a: IntPoly) -> IntPoly:
    """Specialize the first grading variable to 1 (sum over its exponent)."""
    out: IntPoly = {}
    for e, c in a.items():
        k = e[1:]
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def zp_eval_one(a: IntPoly) -> int:
    return sum(a.values())


def to_coeff_list(a: IntPoly) -> list[int]:
    """Univariate dict to a dense coefficient list."""
    if not a:
        return []
    n = max(e[0] for e in a)
    out = [0] * (n + 1)
    for e, c in a.items():
        out[e[0]] = c
    return out


# ---------------------------------------------------------------------------
# numerator of a monomial quotient


def _minimalize(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(x <= y for x, y in zip(h, g)) for h in out):
            out.append(g)
    return out


def monomial_numerator(gens, var_degrees) -> IntPoly:
    """Numerator of the Hilbert series of S/(monomial ideal).

    ``gens`` are exponent tuples, ``var_degrees`` the multidegree of each
    variable; the denominator is the product of (1 - z^deg) over variables.
    """
    grading = len(var_degrees[0]) if var_degrees else 1
    memo: dict = {}

    def mdeg(g: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * grading
        for e, d in zip(g, var_degrees):
            if e:
                for i in range(grading):
                    out[i] += e * d[i]
        return tuple(out)

    def rec(gens: tuple[tuple[int, ...], ...]) -> IntPoly:
        if not gens:
            return zp_one(grading)
        if any(not any(g) for g in gens):
            return zp_zero()  # unit ideal
        key = gens
        hit = memo.get(key)
        if hit is not None:
            return hit
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
        coprime = all(
            not (supports[i] & supports[j])
            for i in range(len(gens))
            for j in range(i + 1, len(gens))
        )
        if coprime:
            result = zp_one(grading)
            for g in gens:
                result = zp_mul(result, zp_sub(zp_one(grading), {mdeg(g): 1}))
        else:
            counts: dict[int, int] = {}
            for s in supports:
                if len(s) > 1:
                    for i in s:
                        counts[i] = counts.get(i, 0) + 1
            pivot = max(sorted(counts), key=lambda i: counts[i])
            plus = tuple(_minimalize(
                [g for g in gens if not g[pivot]]
                + [tuple(1 if i == pivot else 0 for i in range(len(var_degrees)))]
            ))
            colon = tuple(_minimalize(
                [tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g)) for g in gens]
            ))
            result = zp_add(rec(plus), zp_shift(rec(colon), tuple(var_degrees[pivot])))
        memo[key] = result
        return result

    return rec(tuple(_minimalize([tuple(g) for g in gens])))


# ---------------------------------------------------------------------------
# univariate graded Hilbert data


class GradedHilbert:
    """Hilbert series of a graded quotient S/A over one grading variable.

    ``numerator`` sits over the full denominator prod_i (1 - t^w_i); for a
    standard grading the reduced form h(t)/(1-t)^dim with h(1) != 0 is also
    exposed, together with an exact Hilbert-function evaluator.
    """

    def __init__(self, numerator: list[int], weights: tuple[int, ...]):
        self.numerator = list(numerator)
        self.weights = tuple(weights)
        self._hf_cache: list[int] = []
        self.standard = all(w == 1 for w in weights)
        if self.standard:
            h = list(numerator)
            while h and h[-1] == 0:
                h.pop()
            if not h:
                self.h = []
                self.dim = -1
            else:
                dim = len(weights)
                while True:
                    q, ok = _div_one_minus_t(h)
                    if not ok:
                        break
                    h = q
                    dim -= 1
                self.h = h
                self.dim = dim
        else:
            self.h = None
            self.dim = None

    @property
    def multiplicity(self) -> int:
        if not self.standard:
            raise InfiniteLengthError("multiplicity needs a standard grading")
        return sum(self.h)

    def hilbert_function(self, n: int) -> int:
        """Dimension of the degree-n slice."""
        if n < 0:
            return 0
        cache = self._hf_cache
        while len(cache) <= n:
            m = len(cache)
            # coefficient of t^m in numerator / prod (1 - t^w): DP over factors
            cache.append(self._coeff(m))
        return cache[n]

    def _coeff(self, n: int) -> int:
        if self.standard:
            d = self.dim
            if d < 0:
                return 0
            if d == 0:
                return self.h[n] if n < len(self.h) else 0
            return sum(self.h[k] * comb(n - k + d - 1, d - 1) for k in range(min(n, len(self.h) - 1) + 1))
        # general weights: expand the series directly up to degree n
        series = [0] * (n + 1)
        for k, c in enumerate(self.numerator[: n + 1]):
            series[k] = c
        for w in self.weights:
            for m in range(w, n + 1):
                series[m] += series[m - w]
        return series[n]


def cancel_one_minus_t(coeffs: list[int]) -> tuple[list[int], int]:
    """Divide a coefficient list by (1 - t) as often as it stays exact."""
    h = list(coeffs)
    count = 0
    while h:
        q, ok = _div_one_minus_t(h)
        if not ok:
            break
        h = q
        count += 1
    return h, count


def _div_one_minus_t(coeffs: list[int]):
    """(quotient, ok) for division of a coefficient list by (1 - t)."""
    # q(t)(1-t) = p(t)  =>  q_k = p_k + q_{k-1}
    q = []
    carry = 0
    for c in coeffs:
        carry = c + carry
        q.append(carry)
    if carry != 0:
        return coeffs, False
    while q and q[-1] == 0:
        q.pop()
    return q, True
