"""Degreewise linear-algebra oracle, independent of the Groebner engine.

Dimensions of graded slices are obtained by enumerating monomials and row
reducing the span of generator multiples; membership is a rank comparison.
Used by the test suites to cross-check every engine-level primitive.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import NotHomogeneousError, ResourceLimitError
from .ideals import IdealHandle
from .poly import Polynomial

MONOMIAL_GUARD = 10**6


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given total degree (standard weights)."""
    if degree < 0:
        return []
    out = []
    # stars and bars over the bar positions
    for bars in combinations(range(degree + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(degree + nvars - 1 - prev - 1)
        out.append(tuple(exps))
    return out


def _rank(rows: list[list], field) -> int:
    """Row-reduction rank over an exact field.

    GF(p) goes through vectorized elimination on int64 (p < 2^31 keeps every
    product below 2^62, so no overflow); QQ uses exact Fractions.
    """
    if not rows:
        return 0
    if not field.is_rationals:
        return _rank_mod_p(rows, field.p)
    ncols = len(rows[0])
    mat = [row[:] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = field.inv(mat[rank][col])
        mat[rank] = [field.mul(inv, v) for v in mat[rank]]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                c = mat[r][col]
                mat[r] = [field.sub(a, field.mul(c, b)) for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank_mod_p(rows: list[list], p: int) -> int:
    A = np.array(rows, dtype=np.int64) % p
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        nz = np.nonzero(A[rank:, col])[0]
        if not len(nz):
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), p - 2, p)
        A[rank] = A[rank] * inv % p
        below = np.nonzero(A[rank + 1 :, col])[0]
        if len(below):
            idx = below + rank + 1
            A[idx] = (A[idx] - A[idx, col][:, None] * A[rank][None, :]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def _slice_rows(handle: IdealHandle, degree: int):
    """Rows spanning the degree slice of the ideal, and the monomial index."""
    ring = handle.ring
    if any(w != 1 for w in ring.weights):
        raise NotHomogeneousError("the oracle supports standard weights only")
    monos = monomials_of_degree(ring.nvars, degree)
    if len(monos) > MONOMIAL_GUARD:
        raise ResourceLimitError(f"degree slice too large: {len(monos)} monomials")
    index = {m: i for i, m in enumerate(monos)}
    zero = ring.field.zero()
    rows = []
    for g in handle.gens:
        if not g.is_homogeneous():
            raise NotHomogeneousError("oracle needs homogeneous generators")
        gdeg = g.homogeneous_degree()
        if gdeg > degree:
            continue
        for m in monomials_of_degree(ring.nvars, degree - gdeg):
            row = [zero] * len(monos)
            for e, c in g.terms.items():
                row[index[tuple(x + y for x, y in zip(e, m))]] = c
            rows.append(row)
    return rows, index


def oracle_dimension(handle: IdealHandle, degree: int) -> int:
    """dim of the degree slice of R/B by direct row reduction."""
    rows, index = _slice_rows(handle, degree)
    return len(index) - _rank(rows, handle.ring.field)


def oracle_membership(p: Polynomial, handle: IdealHandle) -> bool:
    """Is the homogeneous p in the ideal?  Decided degreewise by ranks."""
    if p.is_zero():
        return True
    if not p.is_homogeneous():
        raise NotHomogeneousError("oracle membership needs a homogeneous polynomial")
    degree = p.homogeneous_degree()
    rows, index = _slice_rows(handle, degree)
    base_rank = _rank(rows, handle.ring.field)
    row = [handle.ring.field.zero()] * len(index)
    for e, c in p.terms.items():
        row[index[e]] = c
    return _rank(rows + [row], handle.ring.field) == base_rank


def oracle_colength_slices(inner: IdealHandle, outer: IdealHandle, up_to: int) -> list[int]:
    """Degreewise dims of outer/inner for degrees 0..up_to, oracle-only."""
    return [oracle_dimension(inner, n) - oracle_dimension(outer, n) for n in range(up_to + 1)]
