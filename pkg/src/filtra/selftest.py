"""Randomized engine-vs-oracle consistency corpus.

Generates small homogeneous instances and checks that Groebner membership,
colon ideals, intersections, and colengths all agree with the degreewise
linear-algebra oracle.  Any disagreement raises immediately.
"""

from __future__ import annotations

import random

from .errors import InfiniteLengthError, InternalConsistencyError
from .field import DEFAULT_FIELD, QQ
from .groebner import normal_form
from .ideals import (
    colength_slices,
    ideal,
    ideal_intersection,
    ideal_quotient,
    ideal_sum,
)
from .oracle import monomials_of_degree, oracle_dimension, oracle_membership
from .poly import Polynomial
from .ring import Ring

VAR_NAMES = ("x", "y", "z", "w")


def _random_homogeneous(ring: Ring, degree: int, rng: random.Random) -> Polynomial:
    monos = monomials_of_degree(ring.nvars, degree)
    f = ring.field
    while True:
        terms = []
        for m in monos:
            if rng.random() < 0.5:
                c = rng.randint(-9, 9) if f.is_rationals else rng.randrange(f.p)
                terms.append((m, c))
        p = Polynomial.from_terms(ring, terms)
        if not p.is_zero():
            return p


def _random_instance(rng: random.Random):
    nvars = rng.randint(2, 4)
    field = QQ if rng.random() < 0.2 else DEFAULT_FIELD
    ring = Ring(field, VAR_NAMES[:nvars])
    ngens = rng.randint(1, 3)
    gens = [_random_homogeneous(ring, rng.randint(1, 3), rng) for _ in range(ngens)]
    return ring, ideal(ring, gens)


def run_corpus(instances: int = 50, seed: int = 0, verbose: bool = False) -> dict:
    rng = random.Random(seed)
    counts = {"instances": 0, "membership": 0, "quotient": 0, "intersection": 0, "colength": 0}
    for i in range(instances):
        ring, A = _random_instance(rng)
        gb = A.groebner()

        # membership: an element built from the generators, and a random poly
        inside = Polynomial.zero(ring)
        target = max(g.homogeneous_degree() for g in A.gens) + rng.randint(0, 2)
        for g in A.gens:
            gd = g.homogeneous_degree()
            if gd <= target:
                inside = inside + g * _random_homogeneous(ring, target - gd, rng)
        for p in (inside, _random_homogeneous(ring, rng.randint(1, 4), rng)):
            if p.is_zero():
                continue
            engine = normal_form(p, gb).is_zero()
            if engine != oracle_membership(p, A):
                raise InternalConsistencyError(f"membership mismatch on instance {i}: {p}")
            counts["membership"] += 1

        # colon: f in (A : b) iff f*b in A, with the two sides decided by
        # different machines
        b = _random_homogeneous(ring, rng.randint(1, 2), rng)
        Q = ideal_quotient(A, ideal(ring, [b]))
        for g in Q.gens[:4]:
            if not oracle_membership(g * b, A):
                raise InternalConsistencyError(f"colon generator fails g*b in A on instance {i}")
            counts["quotient"] += 1
        probe = _random_homogeneous(ring, rng.randint(1, 3), rng)
        lhs = normal_form(probe, Q.groebner()).is_zero()
        rhs = oracle_membership(probe * b, A)
        if lhs != rhs:
            raise InternalConsistencyError(f"colon probe mismatch on instance {i}")
        counts["quotient"] += 1

        # intersection: membership in the meet must match membership in both
        ring2, B = _random_instance(rng)
        if ring2 == ring:
            C = ideal_intersection(A, B)
            for g in C.gens[:4]:
                if not (oracle_membership(g, A) and oracle_membership(g, B)):
                    raise InternalConsistencyError(f"intersection generator escapes on instance {i}")
                counts["intersection"] += 1

        # colength of A inside A + (extra) against oracle slice dims
        extra = _random_homogeneous(ring, rng.randint(1, 3), rng)
        big = ideal_sum(A, ideal(ring, [extra]))
        inner = ideal(ring, list(A.gens))
        try:
            slices = colength_slices(inner, big)
        except InfiniteLengthError:
            slices = None  # not Artinian; nothing to compare
        if slices is not None:
            for n in range(len(slices) + 2):
                want = oracle_dimension(inner, n) - oracle_dimension(big, n)
                got = slices[n] if n < len(slices) else 0
                if want != got:
                    raise InternalConsistencyError(
                        f"colength slice mismatch at degree {n} on instance {i}"
                    )
            counts["colength"] += 1
        counts["instances"] += 1
        if verbose:
            print(f"instance {i}: ok ({ring})")
    return counts
