import pytest
from math import comb

import filtra as F
from filtra.errors import InternalConsistencyError
from filtra.hilbert import (
    binom_int,
    e_from_h,
    e_from_h_derivative,
    gr_presentation,
    hilbert_function_from_h,
    hilbert_polynomial_value,
)

Rp = F.ring(F.DEFAULT_FIELD, "x,y")
R3 = F.ring(F.DEFAULT_FIELD, "x,y,z")


def test_binom_int_handles_negatives():
    assert binom_int(5, 2) == 10
    assert binom_int(1, 2) == 0
    assert binom_int(-1, 2) == 1
    assert binom_int(-2, 3) == -4


def test_hilbert_function_values():
    base = F.ideal(R3, F.polys(R3, "x^2", "x*y"))
    spec = F.adic_filtration(base, F.maximal_ideal(R3))
    assert [spec.hilbert_function(n) for n in (0, 1, 2)] == [1, 3, 4]


def test_hilbert_function_regular_linear_sop():
    spec = F.adic_filtration(F.ideal(R3, []), F.maximal_ideal(R3))
    for n in range(5):
        assert spec.hilbert_function(n) == comb(n + 2, 2)


def test_gr_presentation_of_polynomial_ring():
    spec = F.adic_filtration(F.ideal(Rp, []), F.maximal_ideal(Rp))
    pres = gr_presentation(spec)
    # gr is a polynomial ring in the initial forms: x, y vanish in L
    for name in ("x", "y"):
        v = F.poly(Rp, name)
        lifted = F.Polynomial(pres.ring, {e + (0, 0): c for e, c in v.terms.items()})
        assert pres.ideal.contains(lifted)
    assert F.krull_dim(pres.ideal) == 2


def test_gr_presentation_contains_base_and_generators():
    base = F.ideal(R3, F.polys(R3, "x^2", "x*y"))
    spec = F.adic_filtration(base, F.maximal_ideal(R3))
    pres = gr_presentation(spec)
    ny = pres.ny
    for g in list(base.gens) + list(spec.q.gens):
        lifted = F.Polynomial(pres.ring, {e + (0,) * ny: c for e, c in g.terms.items()})
        assert pres.ideal.contains(lifted)


def test_route_a_example_values(examples):
    _, _, spec = examples["3.6"]
    s = F.filtration_hilbert_exact(spec)
    assert s.h == (1, 1, -1) and s.e_at(2) == -1 and s.d == 2


def test_route_b_matches_route_a_on_m_primary_artinian():
    base = F.ideal(Rp, F.polys(Rp, "x^3", "y^3", "x*y^2"))
    spec = F.adic_filtration(F.ideal(Rp, []), base)
    a, b = F.summaries_agree(spec)
    assert a.same_invariants(b)


def test_e_formulas_agree():
    for h in ((1, 1, -1), (7, -2), (3, 1), (6, -4, 1)):
        for i in range(4):
            assert e_from_h(h, i) == e_from_h_derivative(h, i)


def test_postulation_and_polynomial():
    # h = 1 + t - t^2, d = 2: H(0)=1 while p(0)=2, agreement from n=1 on
    h, d = (1, 1, -1), 2
    e = [e_from_h(h, i) for i in range(d + 1)]
    assert hilbert_polynomial_value(e, d, 0) == 2
    assert hilbert_function_from_h(h, d, 0) == 1
    for n in range(1, 6):
        assert hilbert_function_from_h(h, d, n) == hilbert_polynomial_value(e, d, n)


def test_dim1_profiles():
    # polynomial ring k[x], q = (x): u_n identically zero
    r1 = F.ring(F.DEFAULT_FIELD, "x")
    spec = F.adic_filtration(F.ideal(r1, []), F.ideal(r1, F.polys(r1, "x")))
    prof = F.dim1_profile(spec, F.poly(r1, "x"))
    assert set(prof.u_definition) == {0} and prof.e0 == 1

    # k[x,y]/(y^2): e0 = 2, u_0 = 1, u_n = 0 for n >= 1
    base = F.ideal(Rp, F.polys(Rp, "y^2"))
    spec2 = F.adic_filtration(base, F.maximal_ideal(Rp))
    prof2 = F.dim1_profile(spec2, F.poly(Rp, "x"))
    assert prof2.e0 == 2 and prof2.u_definition[0] == 1
    assert all(u == 0 for u in prof2.u_definition[1:])
    summary = F.summary_for(spec2)
    assert prof2.e_from_u(1) == summary.e_at(1)
    assert prof2.e_from_u(2) == summary.e_at(2)


def test_dim1_profile_rejects_non_superficial():
    # x annihilates a full polynomial subring here, so the slice lengths
    # either diverge or the two u_n formulas disagree; both are loud
    from filtra.errors import InfiniteLengthError

    base = F.ideal(Rp, F.polys(Rp, "x^2"))
    spec = F.adic_filtration(base, F.maximal_ideal(Rp))
    with pytest.raises((InternalConsistencyError, InfiniteLengthError)):
        F.dim1_profile(spec, F.poly(Rp, "x"))
