"""Assemble the bound checks on the second Hilbert coefficient.

Every verifier computes its quantities exactly, evaluates each hypothesis
and each side of every equality condition separately, and never reports a
violated bound while all hypotheses are verified: that combination raises,
because it can only come from a bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    FiltraError,
    InternalConsistencyError,
    NotSuperficialError,
    StabilizationError,
)
from .filtration import (
    DEFAULT_MAX_N,
    FiltrationSpec,
    adic_filtration,
    module_depth_positive,
    quotient_filtration,
    ratliff_rush_filtration,
)
from .hilbert import (
    annihilator_length,
    binom_int,
    filtration_hilbert_sampled,
    summaries_agree,
    summary_for,
)
from .ideals import (
    IdealHandle,
    colength,
    ideal,
    ideal_equal,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
)
from .poly import Polynomial
from .superficial import (
    DepthCertificate,
    SuperficialCertificate,
    certify_superficial,
    certify_superficial_sequence,
    depth_certificate_gr,
    depth_certificate_module,
    reduction_index,
)

VERDICTS = ("BoundHolds", "EqualityHolds", "BoundViolated-HypothesisFailed", "Inapplicable")


@dataclass
class Hypothesis:
    name: str
    ok: bool
    evidence: str = ""

    def to_json_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "evidence": self.evidence}


@dataclass
class TheoremReport:
    theorem: str
    hypotheses: list[Hypothesis] = dc_field(default_factory=list)
    quantities: dict = dc_field(default_factory=dict)
    verdict: str = "Inapplicable"
    certificates: list[dict] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)
    field: str = ""
    seed: int | None = None

    def all_hypotheses_ok(self) -> bool:
        return all(h.ok for h in self.hypotheses)

    def hypothesis(self, name: str, ok: bool, evidence: str = ""):
        self.hypotheses.append(Hypothesis(name, ok, evidence))
        return ok

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "hypotheses": [h.to_json_dict() for h in self.hypotheses],
            "quantities": dict(self.quantities),
            "verdict": self.verdict,
            "certificates": list(self.certificates),
            "notes": list(self.notes),
            "field": self.field,
            "seed": self.seed,
        }


def _finalize(report: TheoremReport, lhs: int, rhs: int, *, sense: str = "le") -> None:
    """Set the verdict for a bound lhs <= rhs (or lhs >= rhs); enforce that a
    violation can only coexist with a failed hypothesis."""
    holds = lhs <= rhs if sense == "le" else lhs >= rhs
    equal = lhs == rhs
    if report.all_hypotheses_ok():
        if not holds:
            raise InternalConsistencyError(
                f"{report.theorem}: bound violated with all hypotheses verified "
                f"(lhs={lhs}, rhs={rhs}); this is a bug"
            )
        report.verdict = "EqualityHolds" if equal else "BoundHolds"
    else:
        report.verdict = "BoundViolated-HypothesisFailed" if not holds else "Inapplicable"


def _certify_sequence(report: TheoremReport, spec: FiltrationSpec, seq, label="superficial sequence"):
    try:
        certs, maximal = certify_superficial_sequence(spec, seq)
        report.certificates.extend(c.to_json_dict() for c in certs)
        report.hypothesis(
            f"{label} certified", True,
            f"length {len(seq)}, maximal={maximal}, methods="
            + ",".join(c.method for c in certs),
        )
        if not maximal:
            report.hypothesis(f"{label} maximal", False, f"length {len(seq)} < dim")
        return certs, maximal
    except NotSuperficialError as exc:
        report.hypothesis(f"{label} certified", False, str(exc))
        return None, False


def _module_depth(report: TheoremReport, spec: FiltrationSpec, seq, need: int, certified: bool):
    """Record the depth >= need hypothesis.  The whole sequence is tested:
    for a certified superficial sequence the regular prefix length IS the
    depth, so a failure index (or a full pass of d elements) pins it."""
    cert = depth_certificate_module(spec.base, seq)
    ok = cert.verified_lower_bound >= need
    exact = None
    if certified:
        if cert.failed_index is not None:
            exact = cert.verified_lower_bound
        elif len(seq) == spec.module_dim():
            exact = len(seq)  # depth cannot exceed the dimension
    report.certificates.append(cert.to_json_dict())
    report.quantities["depthModuleLowerBound"] = cert.verified_lower_bound
    if exact is not None:
        report.quantities["depthModuleExact"] = exact
    report.hypothesis(
        f"depth M >= {need}", ok,
        f"regular prefix of length {cert.verified_lower_bound}"
        + ("" if cert.failed_index is None else f", fails at index {cert.failed_index}"),
    )
    return cert


def _e2_exact(spec: FiltrationSpec, check_routes: bool = True) -> int:
    if spec.kind == "adic" and check_routes:
        exact, _ = summaries_agree(spec)
        return exact.e_at(2)
    return summary_for(spec, route="auto").e_at(2)


def bound_sum_B(spec: FiltrationSpec, J: IdealHandle, max_n: int = DEFAULT_MAX_N):
    """(sum of n*lambda(M_{n+1}/J M_n), term list, verified reduction index).

    Terminates at the first zero term past the stability index: the ideal
    equality J M_n = M_{n+1} then propagates, so all later terms vanish.
    """
    n0 = spec.stability_index(max_n)
    total = 0
    terms: list[int] = []
    for n in range(1, max_n + 1):
        jm = ideal_sum(spec.base, ideal_product(J, spec.ideal(n)))
        t = colength(jm, spec.ideal(n + 1))
        terms.append(t)
        total += n * t
        if t == 0 and n >= n0:
            return total, terms, n
    raise StabilizationError(
        f"sum did not terminate within max_n={max_n}: J is not a verified reduction"
    )


# ---------------------------------------------------------------------------
# upper bound


def verify_upper_bound(
    spec: FiltrationSpec,
    seq,
    max_n: int = DEFAULT_MAX_N,
    theorem: str | None = None,
    check_routes: bool = True,
) -> TheoremReport:
    """e_2 <= sum n*lambda(M_{n+1}/JM_n), with the equality conditions
    (depth of gr at least d-1, and the colon condition) evaluated in both
    directions."""
    seq = list(seq)
    d = spec.module_dim()
    report = TheoremReport(theorem or ("Thm3.1" if d == 2 else "Thm4.1"), field=str(spec.ring.field))
    report.quantities["d"] = d
    report.hypothesis("dimension >= 2", d >= 2, f"d = {d}")
    if d < 2:
        report.verdict = "Inapplicable"
        return report
    certs, maximal = _certify_sequence(report, spec, seq)
    _module_depth(report, spec, seq, d - 1, certs is not None)

    J = ideal(spec.ring, seq)
    summary = summary_for(spec, route="both" if (spec.kind == "adic" and check_routes) else "auto")
    e2 = summary.e_at(2)
    report.quantities["e2"] = e2
    report.quantities["h"] = list(summary.h)
    report.quantities["e"] = list(summary.e)
    report.quantities["postulation"] = summary.postulation

    try:
        total, terms, rstar = bound_sum_B(spec, J, max_n)
        report.quantities["boundSum"] = total
        report.quantities["boundTerms"] = terms
        report.quantities["reductionIndex"] = rstar
    except StabilizationError as exc:
        report.hypothesis("J is a reduction", False, str(exc))
        report.verdict = "Inapplicable"
        return report

    # equality conditions, evaluated unconditionally so both directions of
    # the criterion are visible even when the bound is strict
    colon_ok = _upper_colon_condition(spec, seq)
    report.quantities["colonConditionHolds"] = colon_ok
    depth_gr_ok = None
    if len(seq) == d and certs is not None:
        gr_cert = depth_certificate_gr(spec, seq[: d - 1], max_n=max_n)
        depth_gr_ok = gr_cert.verified_lower_bound >= d - 1
        report.certificates.append(gr_cert.to_json_dict())
        report.quantities["depthGrLowerBound"] = gr_cert.verified_lower_bound
        report.quantities["depthGrAtLeastDMinus1"] = depth_gr_ok
    _finalize(report, e2, total)
    if report.all_hypotheses_ok() and depth_gr_ok is not None:
        conditions = depth_gr_ok and colon_ok
        if (report.verdict == "EqualityHolds") != conditions:
            raise InternalConsistencyError(
                f"{report.theorem}: equality is {report.verdict == 'EqualityHolds'} but the "
                f"conditions give depth_gr={depth_gr_ok}, colon={colon_ok}"
            )
        report.notes.append("equality criterion checked in both directions")
    return report


def _upper_colon_condition(spec: FiltrationSpec, seq) -> bool:
    """(J_1 M : a_d) intersect M_1 = J_1 M, all lifted to the ambient ring."""
    j1m = ideal_sum(spec.base, ideal(spec.ring, seq[:-1]))
    colon = ideal_quotient(j1m, ideal(spec.ring, [seq[-1]]))
    lhs = ideal_intersection(colon, spec.ideal(1))
    return ideal_equal(ideal_sum(lhs, spec.base), j1m)


# ---------------------------------------------------------------------------
# difference bound


def verify_difference_bound(
    spec: FiltrationSpec,
    seq,
    max_n: int = DEFAULT_MAX_N,
    window: int = 3,
    check_routes: bool = True,
) -> TheoremReport:
    """e_2(M-filtration) - e_2(J-adic filtration) against the sum bound,
    with the d = 2 correction sum and its exact completeness certificate."""
    seq = list(seq)
    d = spec.module_dim()
    report = TheoremReport("Thm3.4" if d == 2 else "Thm4.6", field=str(spec.ring.field))
    report.quantities["d"] = d
    report.hypothesis("dimension >= 2", d >= 2, f"d = {d}")
    if d < 2:
        return report
    certs, _ = _certify_sequence(report, spec, seq)

    J = ideal(spec.ring, seq)
    nspec = adic_filtration(spec.base, J)
    if certs is not None:
        _certify_sequence(report, nspec, seq, label="superficial sequence (J-adic)")

    e2m = _e2_exact(spec, check_routes)
    e2n = _e2_exact(nspec, check_routes)
    report.quantities["e2M"] = e2m
    report.quantities["e2N"] = e2n
    total, terms, _ = bound_sum_B(spec, J, max_n)
    report.quantities["boundSum"] = total

    a1 = seq[0]
    lam0 = annihilator_length(spec.base, a1)
    report.quantities["lambdaZeroColonA1"] = lam0
    report.hypothesis("depth M > 0", lam0 == 0 and module_depth_positive(spec.base),
                      f"lambda(0 : a1) = {lam0}")

    if d == 2:
        nq = quotient_filtration(nspec, [a1])
        e2nq = _e2_exact(nq, check_routes)
        report.quantities["e2NmodA1"] = e2nq
        correction, complete, used = _correction_sum(nspec, a1, e2nq - e2n, lam0, max_n, window)
        report.quantities["correctionSum"] = correction
        report.quantities["correctionComplete"] = complete
        report.quantities["correctionTermsUsed"] = used
        if not complete:
            report.notes.append(
                "correction sum truncated (tail-positive); bound stated with the partial sum"
            )
        # side statement without any gr depth assumption
        report.quantities["variantLHS"] = e2m - e2nq
        report.quantities["variantHolds"] = e2m - e2nq <= total
        gr_cert = depth_certificate_gr(nspec, [a1], max_n=max_n) if certs is not None else None
        if gr_cert is not None:
            report.certificates.append(gr_cert.to_json_dict())
            depth_gr_pos = gr_cert.verified_lower_bound >= 1
            report.quantities["depthGrNPositive"] = depth_gr_pos
            if depth_gr_pos:
                report.quantities["cleanBoundHolds"] = e2m - e2n <= total
        _finalize(report, e2m - e2n, total + correction)
        return report

    # d >= 3 needs almost maximal depth of the associated graded module of N
    if certs is not None:
        gr_cert = depth_certificate_gr(nspec, seq[: d - 1], max_n=max_n)
        report.certificates.append(gr_cert.to_json_dict())
        report.hypothesis(
            f"depth gr_N >= {d - 1}", gr_cert.verified_lower_bound >= d - 1,
            f"verified lower bound {gr_cert.verified_lower_bound}",
        )
    else:
        report.hypothesis(f"depth gr_N >= {d - 1}", False, "sequence not certified")
    _finalize(report, e2m - e2n, total)
    return report


def _correction_sum(nspec, a1, target, lam0, max_n, window):
    """sum over n >= 1 of lambda((J^{n+1}M : a1)/J^n M); when lambda(0:a1)=0
    the partial sum reaching the slicing-identity target proves completeness
    (all terms are non-negative)."""
    ha = ideal(nspec.ring, [a1])
    total = 0
    zeros = 0
    for n in range(1, max_n + 1):
        colon = ideal_quotient(nspec.ideal(n + 1), ha)
        t = colength(nspec.ideal(n), colon)
        total += t
        zeros = zeros + 1 if t == lam0 else 0
        if lam0 == 0 and total == target and zeros >= window:
            return total, True, n
        if lam0 > 0 and zeros >= window:
            return total, False, n
    if lam0 == 0 and total == target:
        return total, True, max_n
    if lam0 == 0 and total > target:
        raise InternalConsistencyError(
            f"correction sum {total} overshot the slicing identity target {target}"
        )
    return total, False, max_n


# ---------------------------------------------------------------------------
# lower bound


def verify_lower_bound(
    spec: FiltrationSpec,
    seq,
    max_n: int = DEFAULT_MAX_N,
    max_k: int = 20,
    check_routes: bool = True,
) -> TheoremReport:
    """e_2 >= -C(s+2,2) * lambda((a_1..a_{d-1})M : a_d / (a_1..a_{d-1})M),
    where s is the postulation number of the Ratliff-Rush filtration of the
    two-dimensional reduction."""
    seq = list(seq)
    d = spec.module_dim()
    report = TheoremReport("Thm3.7" if d == 2 else "Prop4.7", field=str(spec.ring.field))
    report.quantities["d"] = d
    report.hypothesis("dimension >= 2", d >= 2, f"d = {d}")
    if d < 2:
        return report
    certs, maximal = _certify_sequence(report, spec, seq)
    _module_depth(report, spec, seq, d - 1, certs is not None)

    e2 = _e2_exact(spec, check_routes)
    report.quantities["e2"] = e2

    reduced = quotient_filtration(spec, seq[: d - 2]) if d > 2 else spec
    if d > 2:
        e2_red = _e2_exact(reduced, check_routes)
        if report.all_hypotheses_ok() and e2_red != e2:
            raise InternalConsistencyError(
                f"e2 changed under regular slicing: {e2} vs {e2_red}"
            )
        report.quantities["e2Reduced"] = e2_red
    b1, b2 = seq[d - 2], seq[d - 1]

    depth_pos = module_depth_positive(reduced.base)
    report.hypothesis("depth of the reduced module > 0", depth_pos, "saturation test")
    if not depth_pos:
        report.verdict = "Inapplicable"
        return report

    rr = ratliff_rush_filtration(reduced, max_n=max_n, max_k=max_k)
    report.quantities["rrAgreesFrom"] = rr.agrees_from
    report.quantities["rrStabilizationExponents"] = list(rr.stabilization_exponents)
    base_summary = summary_for(reduced, route="auto")
    rr_summary = filtration_hilbert_sampled(rr.spec, max_n=max_n)
    if rr_summary.e != base_summary.e:
        raise InternalConsistencyError(
            f"Ratliff-Rush filtration changed the Hilbert coefficients: "
            f"{base_summary.e} vs {rr_summary.e}"
        )
    report.notes.append("e-vector of the Ratliff-Rush filtration verified equal, not assumed")
    s = rr_summary.postulation
    report.quantities["postulationRR"] = s

    j1m = ideal_sum(reduced.base, ideal(reduced.ring, [b1]))
    colon = ideal_quotient(j1m, ideal(reduced.ring, [b2]))
    lam = colength(j1m, colon)
    report.quantities["lambdaColon"] = lam
    factor = binom_int(s + 2, 2)
    report.quantities["binomialFactor"] = factor
    bound = -factor * lam
    report.quantities["lowerBound"] = bound
    _finalize(report, e2, bound, sense="ge")
    return report


# ---------------------------------------------------------------------------
# slicing consistency (the dimension-reduction identities)


def slicing_consistency(spec: FiltrationSpec, a: Polynomial, window: int = 3,
                        max_n: int = DEFAULT_MAX_N) -> dict:
    """Check the superficial-slice identities exactly; any failure raises."""
    cert = certify_superficial(spec, a)
    d = spec.module_dim()
    sliced = quotient_filtration(spec, [a])
    d_sliced = sliced.module_dim()
    if d_sliced != d - 1:
        raise InternalConsistencyError(f"dimension did not drop: {d} -> {d_sliced}")
    s_full = summary_for(spec, route="auto")
    s_slice = summary_for(sliced, route="auto")
    lam0 = annihilator_length(spec.base, a)
    for i in range(0, d - 1):
        if s_slice.e_at(i) != s_full.e_at(i):
            raise InternalConsistencyError(
                f"e_{i} not preserved by the slice: {s_full.e_at(i)} vs {s_slice.e_at(i)}"
            )
    expected = s_full.e_at(d - 1) + (-1) ** (d - 1) * lam0
    if s_slice.e_at(d - 1) != expected:
        raise InternalConsistencyError(
            f"e_{d-1} correction failed: got {s_slice.e_at(d-1)}, expected {expected}"
        )
    delta = s_slice.e_at(d) - s_full.e_at(d)
    terms: list[int] = []
    ha = ideal(spec.ring, [a])
    held_at = None
    zeros = 0
    for n in range(0, max_n + 1):
        colon = ideal_quotient(spec.ideal(n + 1), ha)
        t = colength(spec.ideal(n), colon)
        terms.append(t)
        zeros = zeros + 1 if t == lam0 else 0
        if zeros >= window:
            value = (-1) ** d * (sum(terms) - (n + 1) * lam0)
            if value == delta:
                held_at = n
                break
    if held_at is None:
        raise InternalConsistencyError(
            f"e_{d} slicing identity did not stabilize: delta={delta}, terms={terms}"
        )
    return {
        "certificate": cert.to_json_dict(),
        "d": d,
        "lambdaZeroColon": lam0,
        "e_full": [s_full.e_at(i) for i in range(d + 1)],
        "e_slice": [s_slice.e_at(i) for i in range(d + 1)],
        "eTopIdentityAt": held_at,
        "terms": terms,
    }


# ---------------------------------------------------------------------------
# corollary modes


def corollary_parameter(spec: FiltrationSpec, seq, **kw) -> TheoremReport:
    """Parameter-ideal mode: J = q, the bound collapses to e2 <= 0."""
    if not ideal_equal(ideal(spec.ring, list(seq)), spec.q):
        raise FiltraError("parameter mode needs the sequence to generate q")
    report = verify_upper_bound(spec, seq, theorem="Cor4.3", **kw)
    if report.quantities.get("boundSum", 0) != 0:
        raise InternalConsistencyError("parameter mode must produce a zero bound sum")
    report.notes.append("parameter-ideal specialization: asserts e2 <= 0")
    return report


def corollary_cm(spec: FiltrationSpec, seq, **kw) -> TheoremReport:
    """Cohen-Macaulay mode: equality holds precisely when depth gr >= d-1."""
    report = verify_upper_bound(spec, seq, theorem="Cor4.4", **kw)
    d = report.quantities["d"]
    cm_cert = depth_certificate_module(spec.base, seq)
    cm = cm_cert.verified_lower_bound == d
    report.hypothesis("M is Cohen-Macaulay", cm, f"regular sequence of length {cm_cert.verified_lower_bound}")
    if cm and report.all_hypotheses_ok() and "depthGrAtLeastDMinus1" in report.quantities:
        eq = report.verdict == "EqualityHolds"
        if eq != report.quantities["depthGrAtLeastDMinus1"]:
            raise InternalConsistencyError("Cor4.4 criterion failed in one direction")
        report.notes.append("CM criterion (equality iff depth gr >= d-1) checked both ways")
    return report


def corollary_madic(spec: FiltrationSpec, seq, **kw) -> TheoremReport:
    """Maximal-ideal mode: equality iff M is Cohen-Macaulay and depth gr >= d-1."""
    from .ideals import maximal_ideal

    if not ideal_equal(ideal_sum(spec.base, spec.q), ideal_sum(spec.base, maximal_ideal(spec.ring))):
        raise FiltraError("maximal-ideal mode needs q = m")
    report = verify_upper_bound(spec, seq, theorem="Cor4.5", **kw)
    d = report.quantities["d"]
    cm_cert = depth_certificate_module(spec.base, seq)
    cm = cm_cert.verified_lower_bound == d
    report.quantities["isCohenMacaulay"] = cm
    if report.all_hypotheses_ok() and "depthGrAtLeastDMinus1" in report.quantities:
        eq = report.verdict == "EqualityHolds"
        criterion = cm and report.quantities["depthGrAtLeastDMinus1"]
        if eq != criterion:
            raise InternalConsistencyError("Cor4.5 criterion failed in one direction")
        report.notes.append("m-adic criterion (equality iff CM and depth gr >= d-1) checked both ways")
    return report
