"""Superficial elements, superficial sequences, and depth certificates.

The exact criterion runs through the graded presentation: an element a of
q \\ q^2 is superficial precisely when the annihilator of its initial form
in gr(M) lives in finitely many filtration degrees, i.e. when the
annihilator's Hilbert series in the filtration variable is a polynomial.
A weaker windowed colon search ("BoundedColon") is kept as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .errors import (
    FiltraError,
    InfiniteLengthError,
    InternalConsistencyError,
    NotSuperficialError,
    StabilizationError,
)
from .filtration import FiltrationSpec, module_depth_positive, quotient_filtration
from .hilbert import GrPresentation, bigraded_numerator, gr_presentation, specialized_t_series
from .ideals import (
    IdealHandle,
    ideal,
    ideal_equal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_quotient,
    ideal_sum,
)
from .poly import Polynomial
from .series import cancel_one_minus_t, zp_sub

BOUNDED_COLON_WINDOW = 8


@dataclass(frozen=True)
class SuperficialCertificate:
    element: Polynomial
    method: str  # "GrAnnihilator" | "BoundedColon"
    not_in_q_squared: bool
    annihilator_series: tuple[int, ...] | None = None  # GrAnnihilator evidence
    colon_start: int | None = None  # BoundedColon evidence
    colon_window: int | None = None
    seed: int | None = None

    @property
    def annihilator_length(self) -> int | None:
        if self.annihilator_series is None:
            return None
        return sum(self.annihilator_series)

    def to_json_dict(self) -> dict:
        out = {
            "kind": "superficial",
            "element": str(self.element),
            "method": self.method,
            "notInQSquared": self.not_in_q_squared,
        }
        if self.annihilator_series is not None:
            out["annihilatorSeries"] = list(self.annihilator_series)
        if self.colon_start is not None:
            out["colonStart"] = self.colon_start
            out["colonWindow"] = self.colon_window
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def random_superficial_candidate(spec: FiltrationSpec, seed: int) -> Polynomial:
    """Reproducible random combination of q's generators; not a certificate."""
    gens = spec.q.gens
    degrees = {g.homogeneous_degree() for g in gens}
    if len(degrees) != 1:
        raise FiltraError(
            "random candidates need q generated in a single degree; got degrees %s"
            % sorted(degrees)
        )
    rng = random.Random(seed)
    f = spec.ring.field
    while True:
        if f.is_rationals:
            coeffs = [rng.randint(-50, 50) for _ in gens]
        else:
            coeffs = [rng.randrange(f.p) for _ in gens]
        if any(coeffs):
            break
    out = Polynomial.zero(spec.ring)
    for c, g in zip(coeffs, gens):
        out = out + g.scale(c)
    return out


def _membership_gate(spec: FiltrationSpec, a: Polynomial) -> bool:
    """Require a in q \\ q^2 (in the quotient module's sense); returns the
    not-in-q-squared flag it certifies."""
    if a.is_zero() or not a.is_homogeneous():
        raise NotSuperficialError("candidate must be nonzero and homogeneous")
    if not spec.ideal(1).contains(a):
        raise NotSuperficialError(f"candidate {a} is not in q")
    q2 = ideal_sum(spec.base, ideal_power(spec.q, 2))
    if q2.contains(a):
        raise NotSuperficialError(f"candidate {a} lies in q^2")
    return True


def annihilator_t_series(pres: GrPresentation, y_index: int) -> list[int] | None:
    """Filtration-degree Hilbert series of (0 : y) in S[y]/L, as coefficient
    list, or None when it is not a polynomial (infinite tail)."""
    L = pres.ideal
    y = pres.y_variable(y_index)
    colon = ideal_quotient(L, ideal(pres.ring, [y]))
    n_l = bigraded_numerator(pres, L)
    n_c = bigraded_numerator(pres, colon)
    diff = zp_sub(n_l, n_c)
    for _ in range(pres.nx):
        diff = _try_div(diff, (1, 0))
        if diff is None:
            raise InternalConsistencyError("annihilator numerator not divisible by (1-u)")
    from .series import to_coeff_list, zp_collapse_first

    coeffs = {(k,): c for k, c in enumerate(to_coeff_list(zp_collapse_first(diff))) if c}
    for _ in range(pres.ny):
        coeffs = _try_div(coeffs, (1,))
        if coeffs is None:
            return None
    out = to_coeff_list(coeffs)
    if any(c < 0 for c in out):
        raise InternalConsistencyError("negative annihilator dimensions")
    return out


def _try_div(poly: dict, step: tuple[int, ...]):
    from .series import zp_divide_one_minus

    try:
        return zp_divide_one_minus(poly, step)
    except InfiniteLengthError:
        return None


def certify_superficial(
    spec: FiltrationSpec,
    a: Polynomial,
    method: str = "GrAnnihilator",
    window: int = BOUNDED_COLON_WINDOW,
    seed: int | None = None,
) -> SuperficialCertificate:
    """Certify a superficial element, or raise NotSuperficialError."""
    if spec.kind != "adic" and method != "BoundedColon":
        method = "BoundedColon"  # the graded presentation needs an adic spec
    not_sq = _membership_gate(spec, a)
    if method in ("GrAnnihilator", "both"):
        pres = gr_presentation(spec, extra=(a,))
        series = annihilator_t_series(pres, pres.ny - 1)
        gr_ok = series is not None
        if method == "GrAnnihilator":
            if not gr_ok:
                raise NotSuperficialError(
                    f"{a}: annihilator of the initial form is not finite"
                )
            return SuperficialCertificate(a, "GrAnnihilator", not_sq,
                                          annihilator_series=tuple(series), seed=seed)
    if method in ("BoundedColon", "both"):
        found = _bounded_colon_search(spec, a, window)
        if method == "both":
            colon_ok = found is not None
            if colon_ok != gr_ok:
                raise InternalConsistencyError(
                    f"superficiality methods disagree on {a}: "
                    f"GrAnnihilator={gr_ok}, BoundedColon={colon_ok}"
                )
            if not gr_ok:
                raise NotSuperficialError(f"{a}: both methods refused the certificate")
            return SuperficialCertificate(a, "GrAnnihilator", not_sq,
                                          annihilator_series=tuple(series),
                                          colon_start=found, colon_window=window, seed=seed)
        if found is None:
            raise NotSuperficialError(
                f"{a}: no colon stabilization within window {window} (bounded search)"
            )
        return SuperficialCertificate(a, "BoundedColon", not_sq,
                                      colon_start=found, colon_window=window, seed=seed)
    raise ValueError(f"unknown certification method {method!r}")


def _bounded_colon_search(spec: FiltrationSpec, a: Polynomial, window: int) -> int | None:
    ha = ideal(spec.ring, [a])
    for c in range(window + 1):
        ok = True
        for n in range(c, c + window + 1):
            colon = ideal_quotient(spec.ideal(n + 1), ha)
            meet = ideal_intersection(colon, spec.ideal(c))
            if not ideal_equal(ideal_sum(meet, spec.base), spec.ideal(n)):
                ok = False
                break
        if ok:
            return c
    return None


def certify_superficial_sequence(
    spec: FiltrationSpec,
    seq,
    method: str = "GrAnnihilator",
    seed: int | None = None,
) -> tuple[list[SuperficialCertificate], bool]:
    """Certify seq[0] on M, seq[1] on M/seq[0]M, ...; returns the
    certificates and whether the sequence is maximal (length = dim M)."""
    d = spec.module_dim()
    seq = list(seq)
    if len(seq) > d:
        raise FiltraError(f"sequence longer than the dimension {d}")
    certs = []
    current = spec
    for i, a in enumerate(seq):
        try:
            certs.append(certify_superficial(current, a, method=method, seed=seed))
        except NotSuperficialError as exc:
            raise NotSuperficialError(f"step {i + 1} of the sequence failed: {exc}") from exc
        current = quotient_filtration(current, [a])
    return certs, len(seq) == d


# ---------------------------------------------------------------------------
# depth certificates


@dataclass(frozen=True)
class DepthCertificate:
    target: str  # "module" | "gr"
    sequence: tuple[Polynomial, ...]
    verified_lower_bound: int
    failed_index: int | None  # first index whose step failed, if any
    saturation_positive: bool | None = None  # depth > 0 test (module, empty seq)
    vv_checks: tuple[tuple[int, bool], ...] = ()
    vv_exact: bool | None = None  # True when the VV range provably suffices
    details: dict = dc_field(default_factory=dict, compare=False)

    def to_json_dict(self) -> dict:
        out = {
            "kind": "depth",
            "target": self.target,
            "sequence": [str(p) for p in self.sequence],
            "verifiedDepthLowerBound": self.verified_lower_bound,
        }
        if self.failed_index is not None:
            out["failedIndex"] = self.failed_index
        if self.saturation_positive is not None:
            out["saturationPositive"] = self.saturation_positive
        if self.vv_checks:
            out["vvChecks"] = [[n, ok] for n, ok in self.vv_checks]
            out["vvExact"] = self.vv_exact
        return out


def depth_certificate_module(base: IdealHandle, seq) -> DepthCertificate:
    """Longest prefix of seq that is a regular sequence on R/I."""
    seq = tuple(seq)
    current = base
    bound = 0
    failed = None
    for i, a in enumerate(seq):
        colon = ideal_quotient(current, ideal(base.ring, [a]))
        if ideal_equal(colon, current):
            bound += 1
            current = ideal_sum(current, ideal(base.ring, [a]))
        else:
            failed = i
            break
    sat = module_depth_positive(base) if not seq else None
    return DepthCertificate("module", seq, bound, failed, saturation_positive=sat)


def reduction_index(spec: FiltrationSpec, J: IdealHandle, max_n: int = 50) -> int:
    """Least n* >= stability such that J M_n = M_{n+1}; past the stability
    index the equality propagates, so checking one degree certifies the tail."""
    n0 = spec.stability_index(max_n)
    for n in range(n0, max_n + 1):
        jm = ideal_sum(spec.base, ideal_product(J, spec.ideal(n)))
        if ideal_equal(jm, spec.ideal(n + 1)):
            return n
    raise StabilizationError(f"J is not a verified reduction within max_n={max_n}")


def depth_certificate_gr(
    spec: FiltrationSpec,
    seq,
    window: int = 4,
    max_n: int = 50,
) -> DepthCertificate:
    """Regular-sequence depth certificate for gr(M) via two recorded routes:
    iterated colon by initial forms in the presentation (authoritative), and
    the regularity-plus-intersection conditions on the filtration itself."""
    seq = tuple(seq)
    if not seq:
        raise FiltraError("gr depth certificate needs a nonempty sequence")
    gens = list(spec.q.gens)
    extra = [a for a in seq if all(a != g for g in gens)]
    pres = gr_presentation(spec, extra=tuple(extra))
    all_gens = gens + extra

    def y_index(a: Polynomial) -> int:
        for j, g in enumerate(all_gens):
            if g == a:
                return j
        raise InternalConsistencyError("sequence element lost from the presentation")

    current = pres.ideal
    bound = 0
    failed = None
    for i, a in enumerate(seq):
        y = pres.y_variable(y_index(a))
        colon = ideal_quotient(current, ideal(pres.ring, [y]))
        if ideal_equal(colon, current):
            bound += 1
            current = ideal_sum(current, ideal(pres.ring, [y]))
        else:
            failed = i
            break

    # second route: seq regular on M plus the intersection conditions
    module_cert = depth_certificate_module(spec.base, seq)
    E = ideal(spec.ring, list(seq))
    J_is_full = len(seq) == spec.module_dim()
    vv_exact = False
    if J_is_full:
        try:
            limit = reduction_index(spec, E, max_n)
            vv_exact = True
        except StabilizationError:
            limit = spec.stability_index(max_n) + window
    else:
        limit = spec.stability_index(max_n) + window
    vv: list[tuple[int, bool]] = []
    em = ideal_sum(spec.base, E)
    for n in range(1, limit + 1):
        lhs = ideal_intersection(em, spec.ideal(n + 1))
        rhs = ideal_sum(spec.base, ideal_product(E, spec.ideal(n)))
        vv.append((n, ideal_equal(ideal_sum(lhs, spec.base), rhs)))
    vv_all = module_cert.verified_lower_bound == len(seq) and all(ok for _, ok in vv)
    gr_all = bound == len(seq)
    if vv_exact and vv_all != gr_all:
        raise InternalConsistencyError(
            f"gr-depth methods disagree: colon route {gr_all}, "
            f"Valabrega-Valla route {vv_all} (checks {vv})"
        )
    return DepthCertificate(
        "gr",
        seq,
        bound,
        failed,
        vv_checks=tuple(vv),
        vv_exact=vv_exact,
        details={"moduleRegularPrefix": module_cert.verified_lower_bound},
    )
