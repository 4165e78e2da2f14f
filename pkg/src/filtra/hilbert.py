"""Hilbert functions, series, and coefficients of good filtrations.

Two independent routes are implemented and must agree wherever both apply:

* Route A ("ReesExact"): present the associated graded module by
  eliminating the auxiliary variable from the Rees construction, take the
  bigraded Hilbert series, and specialize exactly.
* Route B ("SampledFit"): sample lambda(M_n/M_{n+1}) termwise and fit the
  eventual polynomial, certifying the fit by a window of vanishing
  differences past the stability index.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, factorial

from .errors import (
    FiltraError,
    InfiniteLengthError,
    InternalConsistencyError,
    NotHomogeneousError,
    StabilizationError,
)
from .filtration import DEFAULT_MAX_N, FiltrationSpec
from .ideals import (
    IdealHandle,
    colength,
    eliminate,
    ideal,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
)
from .poly import Polynomial
from .ring import Ring, block
from .series import (
    cancel_one_minus_t,
    monomial_numerator,
    to_coeff_list,
    zp_collapse_first,
    zp_divide_one_minus,
)


def binom_int(n: int, k: int) -> int:
    """Generalized binomial C(n, k) for integer n (possibly negative)."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)


def e_from_h(h, i: int) -> int:
    """e_i as the binomial sum over the h-vector."""
    return sum(comb(k, i) * hk for k, hk in enumerate(h) if k >= i)


def e_from_h_derivative(h, i: int) -> int:
    """e_i as the i-th derivative of the h-polynomial at 1 over i!."""
    coeffs = list(h)
    for _ in range(i):
        coeffs = [k * c for k, c in enumerate(coeffs)][1:]
    value = sum(coeffs)
    q, r = divmod(value, factorial(i))
    if r:
        raise InternalConsistencyError("derivative formula produced a non-integer")
    return q


def hilbert_polynomial_value(e, d: int, n: int) -> int:
    """p(n) = sum_{i<d} (-1)^i e_i C(n+d-i-1, d-i-1); zero when d = 0."""
    return sum((-1) ** i * e[i] * binom_int(n + d - i - 1, d - i - 1) for i in range(d))


def hilbert_function_from_h(h, d: int, n: int) -> int:
    """H(n) read off the series h(t)/(1-t)^d."""
    if d == 0:
        return h[n] if 0 <= n < len(h) else 0
    return sum(h[k] * comb(n - k + d - 1, d - 1) for k in range(min(n, len(h) - 1) + 1))


def postulation_from_h(h, e, d: int) -> int:
    """Largest n where the Hilbert function and polynomial disagree; -1 if none."""
    if d == 0:
        return len(h) - 1
    s = -1
    for n in range(len(h)):
        if hilbert_function_from_h(h, d, n) != hilbert_polynomial_value(e, d, n):
            s = n
    return s


@dataclass(frozen=True)
class FiltrationHilbertSummary:
    h: tuple[int, ...]
    e: tuple[int, ...]
    d: int
    postulation: int
    route: str  # "ReesExact" | "SampledFit"
    samples: tuple[int, ...]
    certificate: dict = dc_field(default_factory=dict, compare=False)

    @property
    def multiplicity(self) -> int:
        return self.e[0]

    def hilbert_function(self, n: int) -> int:
        return hilbert_function_from_h(self.h, self.d, n)

    def hilbert_polynomial(self, n: int) -> int:
        return hilbert_polynomial_value(self.e, self.d, n)

    def e_at(self, i: int) -> int:
        """e_i for any i >= 0 (beyond the stored range, from the h-vector)."""
        return self.e[i] if i < len(self.e) else e_from_h(self.h, i)

    def to_json_dict(self) -> dict:
        return {
            "h": list(self.h),
            "e": list(self.e),
            "postulation": self.postulation,
            "d": self.d,
            "route": self.route,
            "samples": list(self.samples),
        }

    def same_invariants(self, other: "FiltrationHilbertSummary") -> bool:
        return self.h == other.h and self.e == other.e and self.postulation == other.postulation


def _summary_from_h(h, d: int, route: str, samples, certificate) -> FiltrationHilbertSummary:
    h = tuple(h)
    e = []
    for i in range(d + 1):
        ei = e_from_h(h, i)
        if ei != e_from_h_derivative(h, i):
            raise InternalConsistencyError("binomial-sum and derivative e_i disagree")
        e.append(ei)
    if d >= 1:
        if not h or sum(h) <= 0:
            raise InternalConsistencyError("multiplicity must be positive for d >= 1")
    s = postulation_from_h(h, e, d)
    return FiltrationHilbertSummary(h, tuple(e), d, s, route, tuple(samples), certificate)


# ---------------------------------------------------------------------------
# Route A: Rees elimination


@dataclass(frozen=True)
class GrPresentation:
    """gr(M) presented as S[y1..ym] / L with bidegrees (internal, filtration)."""

    ring: Ring  # S[y...]
    ideal: IdealHandle  # L
    nx: int
    ny: int
    bidegrees: tuple[tuple[int, int], ...]
    generator_map: tuple[Polynomial, ...]  # y_j -> f_j in S

    def y_variable(self, j: int) -> Polynomial:
        return Polynomial.variable(self.ring, self.nx + j)


def gr_presentation(spec: FiltrationSpec, extra=()) -> GrPresentation:
    """Present gr of an adic filtration; ``extra`` appends further generators
    of q (used to realize initial forms of specific elements as variables)."""
    if spec.kind != "adic":
        raise FiltraError("the Rees presentation needs an adic filtration")
    S = spec.ring
    fs = list(spec.q.gens) + list(extra)
    m1 = spec.ideal(1)
    for f in extra:
        if not f.is_homogeneous():
            raise NotHomogeneousError("appended generator is not homogeneous")
        if not m1.contains(f):
            raise FiltraError("appended generator does not lie in q")
    m = len(fs)
    fdegs = [f.homogeneous_degree() for f in fs]

    tname = "_t"
    while tname in S.names:
        tname += "_"
    ynames = []
    for j in range(m):
        cand = f"_y{j + 1}"
        while cand in S.names:
            cand += "_"
        ynames.append(cand)
    rees = Ring(S.field, (tname,) + S.names + tuple(ynames), (1,) + S.weights + tuple(fdegs))

    def lift(p: Polynomial, tshift: int = 0) -> Polynomial:
        return Polynomial(rees, {(tshift,) + e + (0,) * m: c for e, c in p.terms.items()})

    gens = [lift(g) for g in spec.base.gens]
    for j, f in enumerate(fs):
        gens.append(Polynomial.variable(rees, 1 + S.nvars + j) - lift(f, tshift=1))
    kernel = eliminate(ideal(rees, gens), 1)

    sy = kernel.ring
    fs_lift = [Polynomial(sy, {e + (0,) * m: c for e, c in f.terms.items()}) for f in fs]
    L = ideal_sum(kernel, ideal(sy, fs_lift))

    bidegrees = tuple((w, 0) for w in S.weights) + tuple((fdegs[j], 1) for j in range(m))
    for g in L.gens:
        degs = {_bideg(e, bidegrees) for e in g.terms}
        if len(degs) > 1:
            raise InternalConsistencyError("gr presentation ideal is not bihomogeneous")
    return GrPresentation(sy, L, S.nvars, m, bidegrees, tuple(fs))


def _bideg(exps, bidegrees) -> tuple[int, int]:
    a = b = 0
    for e, (u, t) in zip(exps, bidegrees):
        if e:
            a += e * u
            b += e * t
    return a, b


def bigraded_numerator(pres: GrPresentation, handle: IdealHandle | None = None) -> dict:
    """N(u, t) of S[y]/L over (1-u)^nx * prod_j (1 - u^(deg f_j) t)."""
    target = handle if handle is not None else pres.ideal
    gb = target.groebner()
    return monomial_numerator(gb.leading_exponents(), list(pres.bidegrees))


def specialized_t_series(pres: GrPresentation, numer: dict) -> list[int]:
    """Divide N(u,t) by (1-u)^nx exactly and set u = 1; coefficients of t."""
    for _ in range(pres.nx):
        numer = zp_divide_one_minus(numer, (1, 0))
    return to_coeff_list(zp_collapse_first(numer))


def filtration_hilbert_exact(spec: FiltrationSpec) -> FiltrationHilbertSummary:
    """Route A: exact summary through the graded presentation."""
    pres = gr_presentation(spec)
    coeffs = specialized_t_series(pres, bigraded_numerator(pres))
    h, cancels = cancel_one_minus_t(coeffs)
    d = pres.ny - cancels
    dim = spec.module_dim()
    if d != dim:
        raise InternalConsistencyError(
            f"series dimension {d} disagrees with the Krull dimension {dim}"
        )
    samples = [hilbert_function_from_h(h, d, n) for n in range(len(h) + 3)]
    cert = {"presentationVariables": pres.ring.nvars, "fingerprint": pres.ideal.fingerprint}
    return _summary_from_h(h, d, "ReesExact", samples, cert)


# ---------------------------------------------------------------------------
# Route B: termwise sampling


def hilbert_function(spec: FiltrationSpec, n: int) -> int:
    """lambda(M_n/M_{n+1}) by exact colength of consecutive lifts."""
    return spec.hilbert_function(n)


def filtration_hilbert_sampled(
    spec: FiltrationSpec,
    window: int | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> FiltrationHilbertSummary:
    """Route B: sample H(n) until the order-d differences vanish over a
    window past the stability index, then read the h-vector off the samples."""
    d = spec.module_dim()
    w = window if window is not None else d + 3
    n0 = spec.stability_index(max_n)
    samples: list[int] = []

    def H(n: int) -> int:
        while len(samples) <= n:
            samples.append(spec.hilbert_function(len(samples)))
        return samples[n]

    def h_at(k: int) -> int:
        return sum((-1) ** i * comb(d, i) * H(k - i) for i in range(min(k, d) + 1))

    top = max(n0 + d, d) + 1
    while True:
        limit = top + w
        if limit > max_n + d + w:
            raise StabilizationError(
                f"no polynomial agreement within max_n={max_n} (window {w})"
            )
        tail = [h_at(k) for k in range(top, limit)]
        if all(t == 0 for t in tail):
            break
        top += 1

    h = [h_at(k) for k in range(top)]
    while h and h[-1] == 0:
        h.pop()
    cert = {
        "window": w,
        "stabilityIndex": n0,
        "vanishedFrom": top,
        "maxSample": len(samples) - 1,
    }
    summary = _summary_from_h(h, d, "SampledFit", samples, cert)
    for n in range(len(samples)):
        if summary.hilbert_function(n) != samples[n]:
            raise InternalConsistencyError("fitted series does not reproduce the samples")
    return summary


def summaries_agree(spec: FiltrationSpec, window: int | None = None, max_n: int = DEFAULT_MAX_N):
    """Compute both routes, enforce exact agreement, return (exact, sampled)."""
    exact = filtration_hilbert_exact(spec)
    sampled = filtration_hilbert_sampled(spec, window=window, max_n=max_n)
    if not exact.same_invariants(sampled):
        raise InternalConsistencyError(
            f"route disagreement: exact {exact.to_json_dict()} vs sampled {sampled.to_json_dict()}"
        )
    return exact, sampled


def summary_for(spec: FiltrationSpec, route: str = "auto", **kw) -> FiltrationHilbertSummary:
    if route == "A":
        return filtration_hilbert_exact(spec)
    if route == "B":
        return filtration_hilbert_sampled(spec, **kw)
    if route == "both":
        return summaries_agree(spec, **kw)[0]
    return filtration_hilbert_exact(spec) if spec.kind == "adic" else filtration_hilbert_sampled(spec, **kw)


# ---------------------------------------------------------------------------
# annihilator lengths and the dimension-one toolkit


def annihilator_length(base: IdealHandle, a: Polynomial) -> int:
    """lambda(0 :_M a) for M = R/I; infinite length raises."""
    return colength(base, ideal_quotient(base, ideal(base.ring, [a])))


def bounded_annihilator_length(spec: FiltrationSpec, n: int, a: Polynomial) -> int:
    """lambda(0 :_{M_n} a) = lambda((M_n intersect (0 : a)) / 0)."""
    zero_colon = ideal_quotient(spec.base, ideal(spec.ring, [a]))
    meet = ideal_intersection(spec.ideal(n), zero_colon)
    return colength(spec.base, ideal_sum(meet, spec.base))


def quotient_step_length(spec: FiltrationSpec, n: int, a: Polynomial) -> int:
    """lambda(M_{n+1} / a*M_n)."""
    am_n = ideal_sum(spec.base, ideal_product(ideal(spec.ring, [a]), spec.ideal(n)))
    return colength(am_n, spec.ideal(n + 1))


@dataclass(frozen=True)
class Dim1Profile:
    u_definition: tuple[int, ...]  # e0 - H(n)
    u_formula: tuple[int, ...]  # lambda(M_{n+1}/aM_n) - lambda(0 :_{M_n} a)
    e0: int

    def e_from_u(self, i: int) -> int:
        """e_i = sum_{n >= i-1} C(n, i-1) u_n, for i >= 1."""
        if i < 1:
            raise ValueError("the u-sum formula applies to i >= 1")
        return sum(comb(n, i - 1) * u for n, u in enumerate(self.u_definition) if n >= i - 1)


def dim1_profile(spec: FiltrationSpec, a: Polynomial, window: int = 4, max_n: int = DEFAULT_MAX_N) -> Dim1Profile:
    """u_n computed both by definition and by the superficial-slice formula;
    any mismatch is an invariant violation."""
    if spec.module_dim() != 1:
        raise FiltraError("dimension-one profile needs a 1-dimensional module")
    summary = summary_for(spec, route="auto")
    e0 = summary.multiplicity
    u_def: list[int] = []
    u_form: list[int] = []
    n = 0
    zeros = 0
    while zeros < window:
        if n > max_n:
            raise StabilizationError("u_n did not vanish within max_n")
        ud = e0 - spec.hilbert_function(n)
        uf = quotient_step_length(spec, n, a) - bounded_annihilator_length(spec, n, a)
        if ud != uf:
            raise InternalConsistencyError(
                f"u_{n} mismatch: definition {ud} vs superficial formula {uf} "
                "(is the element actually superficial?)"
            )
        u_def.append(ud)
        u_form.append(uf)
        zeros = zeros + 1 if ud == 0 else 0
        n += 1
    return Dim1Profile(tuple(u_def), tuple(u_form), e0)
