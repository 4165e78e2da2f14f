import pytest

import filtra as F
from filtra.errors import FiltraError
from filtra.theorems import bound_sum_B

Rp = F.ring(F.DEFAULT_FIELD, "x,y")
R3 = F.ring(F.DEFAULT_FIELD, "x,y,z")


def madic(ring, *base_texts):
    return F.adic_filtration(F.ideal(ring, F.polys(ring, *base_texts)), F.maximal_ideal(ring))


def test_bound_sum_zero_for_parameter_case():
    spec = madic(Rp)
    total, terms, rstar = bound_sum_B(spec, F.maximal_ideal(Rp))
    assert total == 0 and rstar == 1 and terms[-1] == 0


def test_bound_sum_positive_case():
    # J = (x^4, y^4) reduces q = (x^4, x^3y, xy^3, y^4) with reduction number
    # two: x^6y^2 sits in q^2 but outside Jq, so the n = 1 term is positive
    q = F.ideal(Rp, F.polys(Rp, "x^4", "x^3*y", "x*y^3", "y^4"))
    spec = F.adic_filtration(F.ideal(Rp, []), q)
    J = F.ideal(Rp, F.polys(Rp, "x^4", "y^4"))
    total, terms, rstar = bound_sum_B(spec, J)
    assert terms[0] > 0 and total >= terms[0]
    assert terms[-1] == 0 and rstar >= 2


def test_upper_bound_regular_ring():
    spec = madic(R3)
    rep = F.verify_upper_bound(spec, F.polys(R3, "x", "y", "z"))
    assert rep.verdict == "EqualityHolds"
    assert rep.quantities["e2"] == 0 and rep.quantities["boundSum"] == 0
    assert rep.quantities["colonConditionHolds"] and rep.quantities["depthGrAtLeastDMinus1"]


def test_upper_bound_dimension_guard():
    r1 = F.ring(F.DEFAULT_FIELD, "x")
    spec = F.adic_filtration(F.ideal(r1, []), F.ideal(r1, F.polys(r1, "x")))
    rep = F.verify_upper_bound(spec, F.polys(r1, "x"))
    assert rep.verdict == "Inapplicable"


def test_difference_bound_cm():
    spec = madic(Rp)
    rep = F.verify_difference_bound(spec, F.polys(Rp, "x", "y"))
    assert rep.verdict == "EqualityHolds"
    assert rep.quantities["e2N"] == 0 and rep.quantities["correctionSum"] == 0
    assert rep.quantities["correctionComplete"]


def test_difference_bound_on_depth_one_ring(timings):
    from tests.conftest import certified_random_sequence

    spec = madic(R3, "x^2", "x*y")
    seq, seeds = certified_random_sequence(spec, 2, start_seed=10)
    rep = F.verify_difference_bound(spec, seq)
    assert rep.verdict in ("BoundHolds", "EqualityHolds")
    q = rep.quantities
    assert q["e2M"] == -1
    assert q["e2M"] - q["e2N"] <= q["boundSum"] + q["correctionSum"]
    assert q["correctionComplete"]
    assert q["variantLHS"] <= q["boundSum"]  # the no-depth-assumption variant


def test_lower_bound_cm_cases():
    spec = madic(Rp)
    rep = F.verify_lower_bound(spec, F.polys(Rp, "x", "y"))
    assert rep.verdict in ("BoundHolds", "EqualityHolds")
    assert rep.quantities["lambdaColon"] == 0 and rep.quantities["lowerBound"] == 0
    spec3 = madic(R3)
    rep3 = F.verify_lower_bound(spec3, F.polys(R3, "x", "y", "z"))
    assert rep3.quantities["lowerBound"] == 0 and rep3.quantities["e2"] == 0


def test_lower_bound_negative_e2_consistent(examples):
    _, _, spec36 = examples["3.6"]
    from tests.conftest import certified_random_sequence

    seq, _ = certified_random_sequence(spec36, 2, start_seed=20)
    rep = F.verify_lower_bound(spec36, seq)
    assert rep.verdict in ("BoundHolds", "EqualityHolds")
    q = rep.quantities
    assert q["e2"] == -1
    assert q["lambdaColon"] >= 1  # forced: e2 < 0 needs a positive colon length
    assert q["e2"] >= q["lowerBound"]


def test_slicing_identities_cm_and_singular():
    spec = madic(R3)
    out = F.slicing_consistency(spec, F.poly(R3, "x"))
    assert out["lambdaZeroColon"] == 0
    assert out["e_full"] == out["e_slice"]

    spec2 = madic(R3, "x^2", "x*y")
    out2 = F.slicing_consistency(spec2, F.poly(R3, "z"))
    assert out2["lambdaZeroColon"] == 0


def test_slicing_dimension_one_correction():
    # k[x,y]/(y^2), a = x: dim 1, lambda(0:x) = 0; slice leaves e0 alone
    base = F.ideal(Rp, F.polys(Rp, "y^2"))
    spec = F.adic_filtration(base, F.maximal_ideal(Rp))
    out = F.slicing_consistency(spec, F.poly(Rp, "x"))
    assert out["d"] == 1
    assert out["e_slice"][0] == out["e_full"][0] + out["lambdaZeroColon"]


def test_corollary_parameter_mode():
    spec = madic(Rp)
    rep = F.corollary_parameter(spec, F.polys(Rp, "x", "y"))
    assert rep.theorem == "Cor4.3" and rep.quantities["e2"] == 0
    with pytest.raises(FiltraError):
        F.corollary_parameter(spec, F.polys(Rp, "x"))  # does not generate q


def test_corollary_cm_and_madic_modes():
    spec = madic(R3)
    rep = F.corollary_cm(spec, F.polys(R3, "x", "y", "z"))
    assert rep.verdict == "EqualityHolds"
    rep2 = F.corollary_madic(spec, F.polys(R3, "x", "y", "z"))
    assert rep2.quantities["isCohenMacaulay"] and rep2.verdict == "EqualityHolds"


def test_corollary_madic_non_cm(examples):
    _, _, spec36 = examples["3.6"]
    from tests.conftest import certified_random_sequence

    seq, _ = certified_random_sequence(spec36, 2, start_seed=30)
    rep = F.corollary_madic(spec36, seq)
    assert rep.verdict == "BoundHolds"  # strict: e2 = -1 < bound sum
    assert not rep.quantities["isCohenMacaulay"]
