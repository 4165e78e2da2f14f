"""Acceptance criteria, one test per criterion, each printing a PASS line
with its wall time.  All arithmetic is exact: every comparison is equality."""

import time

import pytest

import filtra as F
from filtra.oracle import oracle_dimension
from filtra.registry import check_expected
from filtra.selftest import run_corpus

from tests.conftest import certified_random_sequence


def _stamp(timings, key, budget, label):
    took = timings[key]
    line = f"ACCEPTANCE {label}: {'PASS' if took < budget else 'SLOW'} ({took:.1f}s, budget {budget}s)"
    print(line)
    assert took < budget, line


def _timed(timings, key, fn):
    t0 = time.perf_counter()
    out = fn()
    timings[key] = timings.get(key, 0.0) + (time.perf_counter() - t0)
    return out


def test_criterion_1_example_36(examples, summaries_36, timings):
    entry, _, _ = examples["3.6"]
    exact, sampled = summaries_36
    assert exact.h == (1, 1, -1)
    assert exact.e_at(2) == -1
    assert exact.same_invariants(sampled)
    assert not check_expected(entry.expected, {
        "h": list(exact.h), "e2": exact.e_at(2), "d": exact.d, "postulation": exact.postulation,
    })
    _stamp(timings, "hilbert 3.6", 5, "1 (example 3.6: h = 1+t-t^2, e2 = -1, routes agree)")


def test_criterion_2_example_32(examples, upper_reports, timings):
    entry, _, spec = examples["3.2"]
    rep = upper_reports["3.2"]
    assert rep.quantities["colonConditionHolds"] is True
    assert rep.quantities["depthModuleExact"] == 1
    assert rep.quantities["d"] == 2
    assert not check_expected(entry.expected, rep.quantities, rep.verdict)
    # the colon identity, re-stated directly on the lifted ideals
    a1, a2 = F.polys(spec.ring, "x^2+y^2", "z^2+t^2")
    lhs = F.ideal_intersection(
        F.ideal_quotient(F.ideal_sum(spec.base, F.ideal(spec.ring, [a1])), F.ideal(spec.ring, [a2])),
        spec.ideal(1),
    )
    assert F.ideal_equal(
        F.ideal_sum(lhs, spec.base), F.ideal_sum(spec.base, F.ideal(spec.ring, [a1]))
    )
    _stamp(timings, "upper 3.2", 10, "2 (example 3.2: colon identity and depth 1)")


def test_criterion_3_example_33(examples, upper_reports, timings):
    entry, _, _ = examples["3.3"]
    rep = upper_reports["3.3"]
    assert rep.quantities["e2"] == 0
    assert rep.verdict == "EqualityHolds"
    assert rep.quantities["colonConditionHolds"] is True
    assert rep.quantities["depthGrAtLeastDMinus1"] is True
    assert rep.quantities["depthModuleExact"] == 1
    assert not check_expected(entry.expected, rep.quantities, rep.verdict)
    _stamp(timings, "upper 3.3", 120, "3 (example 3.3: e2 = 0, equality with both conditions)")


def test_criterion_4_example_42(examples, upper_reports, timings):
    entry, _, spec = examples["4.2"]
    rep = upper_reports["4.2"]
    assert rep.quantities["e2"] == 1
    assert rep.quantities["boundSum"] == 0
    assert rep.verdict == "BoundViolated-HypothesisFailed"
    assert not check_expected(entry.expected, rep.quantities, rep.verdict)
    # exact depth 1 via an explicitly requested certified random sequence
    def depth_exact():
        seq, seeds = certified_random_sequence(spec, 3, start_seed=1)
        cert = F.depth_certificate_module(spec.base, seq)
        return cert, seeds
    cert, seeds = _timed(timings, "upper 4.2", depth_exact)
    assert cert.verified_lower_bound == 1 and cert.failed_index == 1, f"seeds {seeds}"
    _stamp(timings, "upper 4.2", 120, "4 (example 4.2: e2 = 1 > 0 = bound, hypothesis failed)")


def test_criterion_5_parameter_suite(examples, timings):
    def run():
        reports = []
        # three Cohen-Macaulay rings with parameter ideals
        r2 = F.ring(F.DEFAULT_FIELD, "x,y")
        reports.append(F.corollary_parameter(
            F.adic_filtration(F.ideal(r2, []), F.maximal_ideal(r2)), F.polys(r2, "x", "y")))
        r3 = F.ring(F.DEFAULT_FIELD, "x,y,z")
        reports.append(F.corollary_parameter(
            F.adic_filtration(F.ideal(r3, []), F.maximal_ideal(r3)), F.polys(r3, "x", "y", "z")))
        cone = F.adic_filtration(
            F.ideal(r3, F.polys(r3, "x*z - y^2")),
            F.ideal(r3, F.polys(r3, "x+z", "y")),
        )
        reports.append(F.corollary_parameter(cone, F.polys(r3, "x+z", "y")))
        cm_count = len(reports)
        # the two bundled almost-maximal-depth rings with their parameter ideals
        for ex in ("3.2", "3.3"):
            _, tf, spec = examples[ex]
            reports.append(F.corollary_parameter(spec, tf.sequence()))
        return reports, cm_count

    reports, cm_count = _timed(timings, "cor43", run)
    for i, rep in enumerate(reports):
        assert rep.all_hypotheses_ok(), rep.to_json_dict()
        assert rep.quantities["e2"] <= 0
        if i < cm_count:
            assert rep.quantities["e2"] == 0
        assert rep.verdict in ("BoundHolds", "EqualityHolds")
    _stamp(timings, "cor43", 300, "5 (parameter-ideal suite: e2 <= 0, zero in the CM cases)")


def test_criterion_6_nonnegative_suite(timings):
    def run():
        out = []
        r2 = F.ring(F.DEFAULT_FIELD, "x,y")
        cases = [
            (r2, [], ("x^4", "x^3*y", "x*y^3", "y^4")),
            (r2, [], ("x^2", "x*y", "y^2")),
        ]
        r3 = F.ring(F.DEFAULT_FIELD, "x,y,z")
        cases.append((r3, [], ("x^2", "x*y", "x*z", "y^2", "y*z", "z^2")))
        for ring, base_texts, q_texts in cases:
            base = F.ideal(ring, F.polys(ring, *base_texts))
            q = F.ideal(ring, F.polys(ring, *q_texts))
            spec = F.adic_filtration(base, q)
            seq, seeds = certified_random_sequence(spec, F.krull_dim(base), start_seed=100)
            out.append((F.verify_lower_bound(spec, seq), seeds))
        return out

    results = _timed(timings, "cor38", run)
    for rep, seeds in results:
        assert rep.all_hypotheses_ok(), (rep.to_json_dict(), seeds)
        assert rep.quantities["lambdaColon"] == 0
        assert rep.quantities["lowerBound"] == 0
        assert rep.quantities["e2"] >= 0
        assert rep.verdict in ("BoundHolds", "EqualityHolds")
    _stamp(timings, "cor38", 300, "6 (CM non-parameter suite: e2 >= 0 with zero colon term)")


def test_criterion_7_lower_bound_on_33(examples, timings):
    entry, tf, spec = examples["3.3"]

    def run():
        rep = F.verify_lower_bound(spec, tf.sequence())
        seq = tf.sequence()
        b = F.ideal_sum(spec.base, F.ideal(spec.ring, [seq[0]]))
        a = F.ideal_quotient(b, F.ideal(spec.ring, [seq[1]]))
        slices = F.colength_slices(b, a)
        oracle_lam = sum(
            oracle_dimension(b, n) - oracle_dimension(a, n) for n in range(len(slices) + 2)
        )
        return rep, oracle_lam

    rep, oracle_lam = _timed(timings, "lower33", run)
    q = rep.quantities
    assert rep.verdict in ("BoundHolds", "EqualityHolds")
    assert q["lambdaColon"] == oracle_lam, "oracle disagrees on the colon length"
    from filtra.hilbert import binom_int
    assert q["lowerBound"] == -binom_int(q["postulationRR"] + 2, 2) * q["lambdaColon"]
    assert q["e2"] >= q["lowerBound"]
    _stamp(timings, "lower33", 300, "7 (lower bound on example 3.3 with oracle-confirmed lambda)")


def test_criterion_8_route_equivalence(examples, timings):
    def run():
        for ex in ("3.6", "3.2", "3.3", "4.2"):
            _, _, spec = examples[ex]
            exact, sampled = F.summaries_agree(spec)
            assert exact.h == sampled.h and exact.e == sampled.e
            assert exact.postulation == sampled.postulation
            n0 = spec.stability_index()
            for n in range(n0 + 4):
                inner, outer = spec.ideal(n + 1), spec.ideal(n)
                slices = F.colength_slices(inner, outer)
                for j in range(len(slices) + 2):
                    want = oracle_dimension(inner, j) - oracle_dimension(outer, j)
                    got = slices[j] if j < len(slices) else 0
                    assert want == got, (ex, n, j)
                assert sampled.samples[n] == sum(slices)

    _timed(timings, "routes", run)
    _stamp(timings, "routes", 300, "8 (route A = route B on all bundled filtrations, oracle-checked)")


def test_criterion_9_dimension_one(timings):
    def run():
        out = []
        r2 = F.ring(F.DEFAULT_FIELD, "x,y")
        r1 = F.ring(F.DEFAULT_FIELD, "x")
        cases = [
            (F.adic_filtration(F.ideal(r2, F.polys(r2, "y^2")), F.maximal_ideal(r2)), F.poly(r2, "x")),
            (F.adic_filtration(F.ideal(r2, F.polys(r2, "x*y")), F.maximal_ideal(r2)), F.poly(r2, "x+y")),
            (F.adic_filtration(F.ideal(r1, []), F.ideal(r1, F.polys(r1, "x^2"))), F.poly(r1, "x^2")),
        ]
        for spec, a in cases:
            F.certify_superficial(spec, a)
            profile = F.dim1_profile(spec, a)
            summary = F.summary_for(spec)
            assert profile.u_definition == profile.u_formula
            assert profile.e0 == summary.e_at(0)
            assert profile.e_from_u(1) == summary.e_at(1)
            assert profile.e_from_u(2) == summary.e_at(2)
            out.append(profile)
        return out

    profiles = _timed(timings, "dim1", run)
    assert len(profiles) == 3
    _stamp(timings, "dim1", 60, "9 (dimension-one identities on three quotients)")


def test_criterion_10_slicing_suite(examples, timings):
    def run():
        results = []
        r3 = F.ring(F.DEFAULT_FIELD, "x,y,z")
        results.append(F.slicing_consistency(
            F.adic_filtration(F.ideal(r3, []), F.maximal_ideal(r3)), F.poly(r3, "x")))
        _, _, spec36 = examples["3.6"]
        results.append(F.slicing_consistency(spec36, F.poly(spec36.ring, "z")))
        _, tf32, spec32 = examples["3.2"]
        results.append(F.slicing_consistency(spec32, tf32.sequence()[0]))
        _, tf33, spec33 = examples["3.3"]
        results.append(F.slicing_consistency(spec33, tf33.sequence()[0]))
        # a depth-zero module where lambda(0 : a) is positive
        r2 = F.ring(F.DEFAULT_FIELD, "x,y")
        emb = F.adic_filtration(F.ideal(r2, F.polys(r2, "x^2", "x*y")), F.maximal_ideal(r2))
        results.append(F.slicing_consistency(emb, F.poly(r2, "y")))
        _, _, spec42 = examples["4.2"]
        seq, _ = certified_random_sequence(spec42, 1, start_seed=1)
        results.append(F.slicing_consistency(spec42, seq[0]))
        return results

    results = _timed(timings, "slices", run)
    assert len(results) >= 5
    assert any(r["lambdaZeroColon"] > 0 for r in results)
    _stamp(timings, "slices", 300, "10 (slice identities on six certified superficial slices)")


def test_criterion_11_engine_oracle_corpus(timings):
    counts = _timed(timings, "corpus", lambda: run_corpus(instances=50, seed=2024))
    assert counts["instances"] == 50
    assert counts["membership"] >= 50
    assert counts["quotient"] >= 50
    _stamp(timings, "corpus", 300, "11 (randomized engine vs oracle corpus, 50 instances)")
