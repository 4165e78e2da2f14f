"""Good q-filtrations of M = R/I and their derived filtrations.

A filtration is stored through lifts: the degree-n ideal is the preimage in
the ambient polynomial ring S of the submodule M_n of M = S/I, so it always
contains I.  Adic filtrations lift to I + q^n; explicit chains (used for the
Ratliff-Rush filtration) store their lifted ideals directly and continue
q-adically past the stored range.
"""

from __future__ import annotations

from .errors import (
    ContainmentError,
    FiltraError,
    NotHomogeneousError,
    StabilizationError,
)
from .ideals import (
    IdealHandle,
    colength,
    ideal,
    ideal_contains,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    krull_dim,
    maximal_ideal,
    saturation,
    unit_ideal,
)
from .poly import Polynomial

DEFAULT_MAX_N = 50
DEFAULT_MAX_K = 20


class FiltrationSpec:
    """A good q-filtration of M = R/I, either q-adic or an explicit chain.

    ``base`` is the defining ideal I; ``q`` the filtration ideal (the tail
    ideal for explicit chains); ``chain`` the lifted ideals M_0, M_1, ...
    for the explicit kind, with chain[0] the unit ideal.
    """

    def __init__(self, base: IdealHandle, q: IdealHandle, chain=None, validate: bool = True):
        base.ring.check_same(q.ring)
        self.ring = base.ring
        self.base = base
        self.q = q
        self.chain = tuple(chain) if chain is not None else None
        self._ideal_cache: dict[int, IdealHandle] = {}
        self._stability: int | None = None
        self._dim: int | None = None
        if validate:
            self._validate()

    @property
    def kind(self) -> str:
        return "adic" if self.chain is None else "explicit"

    def _validate(self):
        if not self.base.homogeneous:
            raise NotHomogeneousError("defining ideal must be homogeneous")
        if not self.q.homogeneous:
            raise NotHomogeneousError("filtration ideal must be homogeneous")
        if self.q.is_zero():
            raise FiltraError("filtration ideal is zero")
        top = ideal_sum(self.base, self.q)
        d0 = krull_dim(top)
        if d0 == -1:
            raise FiltraError("q + I is the unit ideal; the module would be zero")
        if d0 != 0:
            raise FiltraError("q is not m-primary modulo I (dim of R/(I+q) is %d)" % d0)
        if self.chain is not None:
            if len(self.chain) < 2:
                raise FiltraError("explicit chain needs at least M_0 and M_1")
            if not self.chain[0].is_unit():
                raise FiltraError("explicit chain must start at M_0 = M (the unit ideal)")
            for n, c in enumerate(self.chain):
                if not c.homogeneous:
                    raise NotHomogeneousError("explicit chain ideal at index %d not homogeneous" % n)
                if not ideal_contains(c, self.base):
                    raise ContainmentError("chain ideal at index %d does not contain I" % n)
            for n in range(len(self.chain) - 1):
                if not ideal_contains(self.chain[n], self.chain[n + 1]):
                    raise ContainmentError("chain not decreasing at index %d" % n)
                step = ideal_sum(self.base, ideal_product(self.q, self.chain[n]))
                if not ideal_contains(self.chain[n + 1], step):
                    raise ContainmentError("q * M_%d is not inside M_%d" % (n, n + 1))

    def ideal(self, n: int) -> IdealHandle:
        """Lift of M_n to the ambient polynomial ring (always contains I)."""
        if n < 0:
            raise ValueError("filtration degree must be non-negative")
        got = self._ideal_cache.get(n)
        if got is not None:
            return got
        if n == 0:
            out = unit_ideal(self.ring)
        elif self.chain is not None and n < len(self.chain):
            out = self.chain[n]
        elif self.chain is not None:
            last = len(self.chain) - 1
            tail = ideal_product(ideal_power(self.q, n - last), self.chain[last])
            out = ideal_sum(self.base, tail)
        else:
            out = ideal_sum(self.base, ideal_power(self.q, n))
        self._ideal_cache[n] = out
        return out

    def module_dim(self) -> int:
        if self._dim is None:
            self._dim = krull_dim(self.base)
        return self._dim

    def hilbert_function(self, n: int) -> int:
        """lambda(M_n / M_{n+1}), exact."""
        return colength(self.ideal(n + 1), self.ideal(n))

    def stability_index(self, max_n: int = DEFAULT_MAX_N) -> int:
        """Least n0 such that q*M_n = M_{n+1} for every n >= n0."""
        if self._stability is not None:
            return self._stability
        if self.chain is None:
            self._stability = 0  # q-adic: q*q^n = q^(n+1) by construction
            return 0
        last = len(self.chain) - 1
        if last > max_n:
            raise StabilizationError(f"chain longer than max_n={max_n}")
        n0 = last  # past the chain the filtration is q-adic by definition
        for n in range(last - 1, -1, -1):
            step = ideal_sum(self.base, ideal_product(self.q, self.ideal(n)))
            if ideal_equal(step, self.ideal(n + 1)):
                n0 = n
            else:
                break
        self._stability = n0
        return n0

    def __repr__(self) -> str:
        return f"<{self.kind} filtration of {self.ring}/I, q={self.q!r}>"


def adic_filtration(base: IdealHandle, q: IdealHandle) -> FiltrationSpec:
    return FiltrationSpec(base, q)


def explicit_filtration(base: IdealHandle, chain, q: IdealHandle) -> FiltrationSpec:
    return FiltrationSpec(base, q, chain=chain)


def quotient_filtration(spec: FiltrationSpec, elems) -> FiltrationSpec:
    """The induced filtration on M / (elems)M; elements must lie in M_1."""
    elems = list(elems)
    if not elems:
        return spec
    m1 = spec.ideal(1)
    for a in elems:
        if not m1.contains(a):
            raise ContainmentError(f"element {a} is not in the filtration ideal")
    extra = ideal(spec.ring, elems)
    new_base = ideal_sum(spec.base, extra)
    if spec.chain is None:
        return FiltrationSpec(new_base, spec.q, validate=False)
    new_chain = [spec.chain[0]] + [ideal_sum(c, extra) for c in spec.chain[1:]]
    return FiltrationSpec(new_base, spec.q, chain=new_chain, validate=False)


def module_depth_positive(base: IdealHandle) -> bool:
    """depth(R/I) > 0, decided by the saturation test (I : m^inf) = I."""
    sat = saturation(base, maximal_ideal(base.ring))
    return ideal_equal(sat, base)


def ratliff_rush_ideal(spec: FiltrationSpec, n: int, max_k: int = DEFAULT_MAX_K):
    """Stabilized colon (lift M_{n+k}) : q^k; returns (ideal, k used).

    The chain over k is increasing; per convention the first k with two
    consecutive equal values is accepted and recorded.
    """
    if n < 1:
        raise ValueError("Ratliff-Rush degrees start at n = 1")
    prev = ideal_quotient(spec.ideal(n + 1), spec.q)
    for k in range(1, max_k + 1):
        nxt = ideal_quotient(spec.ideal(n + k + 1), ideal_power(spec.q, k + 1))
        if ideal_equal(prev, nxt):
            return prev, k
        prev = nxt
    raise StabilizationError(f"Ratliff-Rush colon chain at n={n} not stable within k<={max_k}")


class RatliffRushResult:
    """The enlarged filtration together with its construction evidence."""

    def __init__(self, source: FiltrationSpec, spec: FiltrationSpec, ks: list[int], agrees_from: int):
        self.source = source
        self.spec = spec
        self.stabilization_exponents = tuple(ks)
        self.agrees_from = agrees_from  # tilde M_n = M_n for n >= this index


def ratliff_rush_filtration(
    spec: FiltrationSpec,
    max_n: int = DEFAULT_MAX_N,
    max_k: int = DEFAULT_MAX_K,
    confirm: int = 2,
) -> RatliffRushResult:
    """Build the Ratliff-Rush filtration of an adic filtration termwise.

    Requires depth M > 0.  The chain is extended until it coincides with the
    source filtration for ``confirm`` consecutive degrees; past that point
    the two filtrations agree degreewise, so the explicit chain continues
    q-adically.
    """
    if not module_depth_positive(spec.base):
        raise FiltraError("Ratliff-Rush filtration needs depth M > 0")
    chain = [unit_ideal(spec.ring)]
    ks: list[int] = []
    agree_run = 0
    agrees_from = None
    n = 1
    while n <= max_n:
        tilde, k = ratliff_rush_ideal(spec, n, max_k)
        ks.append(k)
        if not ideal_contains(tilde, spec.ideal(n)):
            raise ContainmentError("tilde ideal does not contain the source ideal")
        chain.append(tilde)
        if ideal_equal(tilde, spec.ideal(n)):
            agree_run += 1
            if agrees_from is None:
                agrees_from = n
            if agree_run >= confirm:
                break
        else:
            agree_run = 0
            agrees_from = None
        n += 1
    else:
        raise StabilizationError(
            f"Ratliff-Rush filtration did not merge with the source within n<={max_n}"
        )
    rr = FiltrationSpec(spec.base, spec.q, chain=chain)
    return RatliffRushResult(spec, rr, ks, agrees_from)
