import pytest

import filtra as F
from filtra.errors import ContainmentError, FiltraError

R = F.ring(F.QQ, "x,y")
Rp = F.ring(F.DEFAULT_FIELD, "x,y")


def test_adic_lift_examples():
    spec = F.adic_filtration(F.ideal(R, []), F.maximal_ideal(R))
    assert spec.ideal(0).is_unit()
    assert F.ideal_equal(spec.ideal(2), F.ideal(R, F.polys(R, "x^2", "x*y", "y^2")))


def test_adic_rejects_non_primary_q():
    with pytest.raises(FiltraError):
        F.adic_filtration(F.ideal(R, []), F.ideal(R, F.polys(R, "x")))


def test_explicit_tail_rule():
    q = F.maximal_ideal(R)
    base = F.ideal(R, [])
    chain = [F.unit_ideal(R), F.ideal(R, F.polys(R, "x", "y"))]
    spec = F.explicit_filtration(base, chain, q)
    assert F.ideal_equal(spec.ideal(2), F.ideal_power(q, 2))
    assert spec.stability_index() == 0  # chain equals the adic one


def test_quotient_filtration():
    spec = F.adic_filtration(F.ideal(R, []), F.maximal_ideal(R))
    sliced = F.quotient_filtration(spec, F.polys(R, "x"))
    assert F.ideal_equal(sliced.base, F.ideal(R, F.polys(R, "x")))
    assert F.quotient_filtration(spec, []) is spec
    with pytest.raises(ContainmentError):
        F.quotient_filtration(
            F.adic_filtration(F.ideal(R, []), F.ideal(R, F.polys(R, "x^2", "y^2"))),
            F.polys(R, "x"),
        )


def test_adic_stability_is_zero():
    spec = F.adic_filtration(F.ideal(R, []), F.ideal(R, F.polys(R, "x^2", "y^2")))
    assert spec.stability_index() == 0


@pytest.fixture(scope="module")
def rr_classic():
    q = F.ideal(Rp, F.polys(Rp, "x^4", "x^3*y", "x*y^3", "y^4"))
    spec = F.adic_filtration(F.ideal(Rp, []), q)
    return spec, F.ratliff_rush_filtration(spec)


def test_ratliff_rush_enlarges_degree_one(rr_classic):
    spec, rr = rr_classic
    extra = F.poly(Rp, "x^2*y^2")
    assert rr.spec.ideal(1).contains(extra)
    assert not spec.ideal(1).contains(extra)
    # q * tildeM_1 lands in q^2, generator by generator
    for g in spec.q.gens:
        assert spec.ideal(2).contains(g * extra)


def test_ratliff_rush_stability_positive(rr_classic):
    _, rr = rr_classic
    assert rr.spec.stability_index() >= 1


def test_ratliff_rush_filtration_axioms(rr_classic):
    spec, rr = rr_classic
    for n in range(1, len(rr.spec.chain) - 1):
        tilde_n = rr.spec.ideal(n)
        tilde_next = rr.spec.ideal(n + 1)
        assert F.ideal_contains(tilde_n, spec.ideal(n))  # M_n inside tilde M_n
        step = F.ideal_sum(spec.base, F.ideal_product(spec.q, tilde_n))
        assert F.ideal_contains(tilde_next, step)  # q * tilde M_n inside tilde M_{n+1}


def test_ratliff_rush_idempotent(rr_classic):
    spec, rr = rr_classic
    for n in range(1, min(5, len(rr.spec.chain))):
        again, _ = F.ratliff_rush_ideal(rr.spec, n)
        assert F.ideal_equal(again, rr.spec.ideal(n))


def test_maximal_ideal_powers_are_rr_closed():
    spec = F.adic_filtration(F.ideal(Rp, []), F.maximal_ideal(Rp))
    for n in (1, 2, 3):
        tilde, _ = F.ratliff_rush_ideal(spec, n)
        assert F.ideal_equal(tilde, spec.ideal(n))


def test_rr_rejects_depth_zero():
    base = F.ideal(Rp, F.polys(Rp, "x^2", "x*y"))  # depth-zero quotient
    spec = F.adic_filtration(base, F.maximal_ideal(Rp))
    with pytest.raises(FiltraError):
        F.ratliff_rush_filtration(spec)


def test_module_depth_positive():
    assert F.module_depth_positive(F.ideal(Rp, []))
    assert not F.module_depth_positive(F.ideal(Rp, F.polys(Rp, "x^2", "x*y")))
