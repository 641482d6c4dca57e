"""Behavior of the verification engine itself: sensitivity, pairs, growth laws."""

import math
from fractions import Fraction

import numpy as np
import pytest

from gek.entropy import Distribution, entropy_spec
from gek.errors import ParameterError
from gek.grouplog import IdentityGroup, KaniadakisGroup, MultiplicativeGroup
from gek.properties import (
    GrowthLaw,
    MajorizationPair,
    check_composability,
    check_composability_on_uniform,
    check_concavity_region_saq,
    check_group_axioms_numeric,
    check_schur_concavity,
    check_sk_axioms,
    generate_majorization_pair,
    majorizes,
    round_trip_residual,
    saq_concavity_counterexample_search,
    solve_growth_law,
    tsallis_qstar,
)

SPECS = {
    "renyi": entropy_spec("renyi", {"alpha": 0.5}),
    "zab": entropy_spec("zab", {"a": 0.3, "b": -0.2, "alpha": 0.5}),
    "tsallis_aq": entropy_spec("tsallis_aq", {"a": 1.0, "q": 0.5}),
}


class TestComposability:
    def test_renyi_passes(self):
        report = check_composability(SPECS["renyi"], trials=1000, tol=1e-10, seed=3)
        assert report.passed and report.worst_residual <= 1e-10

    def test_zab_passes(self):
        report = check_composability(SPECS["zab"], trials=500, tol=1e-10, seed=4)
        assert report.passed

    def test_null_case(self):
        spec = SPECS["renyi"]
        d = Distribution.delta(3)
        assert spec.value(d) == 0.0
        assert spec.phi(0.0, 0.0) == 0.0

    def test_control_entropy_fails(self):
        # engine sensitivity: the quadratically weighted surprise obeys no law
        report = check_composability(entropy_spec("control"), trials=200, tol=1e-10, seed=5)
        assert not report.passed
        assert report.failures > 100
        assert report.witness  # worst case is recorded

    def test_report_shape(self):
        report = check_composability(SPECS["renyi"], trials=10, seed=6)
        d = report.as_dict()
        assert d["property"] == "composability"
        assert d["seed"] == 6
        assert d["passed"] is True

    def test_uniform_restriction(self):
        # non-normative probe: strict composability implies the uniform-only law
        report = check_composability_on_uniform(SPECS["zab"], trials=200, seed=8)
        assert report.passed
        control = check_composability_on_uniform(entropy_spec("control"), trials=200, seed=8)
        assert not control.passed


class TestGroupAxiomsNumeric:
    def test_identity_exact(self):
        report = check_group_axioms_numeric(IdentityGroup(), 0.5, trials=200, tol=1e-14, seed=0)
        assert report.passed

    def test_multiplicative(self):
        report = check_group_axioms_numeric(MultiplicativeGroup(0.7), 0.4, trials=500, tol=1e-12, seed=1)
        assert report.passed

    def test_kaniadakis(self):
        report = check_group_axioms_numeric(KaniadakisGroup(0.5), 0.5, trials=500, tol=1e-10, seed=2)
        assert report.passed

    def test_range_errors_become_skips(self):
        # both exponents positive: the function has a finite range infimum and
        # alpha > 1 pushes sampled values below it, so some trials are skipped
        from gek.grouplog import AbelGroup

        report = check_group_axioms_numeric(AbelGroup(2.0, 1.0), 3.0, trials=300, tol=1e-9, seed=3)
        assert report.passed
        assert report.skipped > 0


class TestSkAxioms:
    @pytest.mark.parametrize("name", ["renyi", "zab"])
    def test_families_pass(self, name):
        continuity, maximum, expansibility = check_sk_axioms(SPECS[name], trials=200, seed=7)
        assert continuity.passed and math.isfinite(continuity.worst_residual)
        assert maximum.passed
        assert expansibility.passed and expansibility.worst_residual == 0.0

    def test_uniform_maximum_value(self):
        spec = SPECS["renyi"]
        assert spec.uniform_value(4) == pytest.approx(math.log(4))


class TestMajorization:
    def test_partial_sum_check(self):
        assert majorizes([0.6, 0.3, 0.1], [0.4, 0.35, 0.25], tol=1e-12)
        assert not majorizes([0.4, 0.35, 0.25], [0.6, 0.3, 0.1], tol=1e-12)

    def test_exact_fractions(self):
        r = [Fraction(3, 4), Fraction(1, 4), Fraction(0)]
        p = [Fraction(1, 3)] * 3
        assert majorizes(r, p)
        assert not majorizes(p, r)

    def test_uniform_is_minimal_delta_is_maximal(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            w = int(rng.integers(2, 7))
            q = rng.dirichlet(np.ones(w))
            assert majorizes(q.tolist(), [1.0 / w] * w, tol=1e-12)
            assert majorizes([1.0] + [0.0] * (w - 1), q.tolist(), tol=1e-12)

    def test_generated_pairs_validate_exactly(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            pair = generate_majorization_pair(int(rng.integers(2, 8)), steps=int(rng.integers(1, 15)), rng=rng)
            # power-of-two mass grid makes the float dominance check exact
            assert majorizes(pair.r.p.tolist(), pair.p.p.tolist(), tol=0)

    def test_invalid_pair_rejected(self):
        with pytest.raises(ValueError):
            MajorizationPair(p=Distribution([0.9, 0.1]), r=Distribution([0.5, 0.5]))


class TestSchurConcavity:
    @pytest.mark.parametrize(
    "spec",
        [
            entropy_spec("renyi", {"alpha": 2.0}),
            entropy_spec("zab", {"a": 0.4, "b": 0.1, "alpha": 2.0}),
            entropy_spec("zq", {"q": 1.5, "alpha": 3.0}),
        ],
        ids=lambda s: s.describe(),
    )
    def test_families_pass_above_one(self, spec):
        ordering, criterion = check_schur_concavity(spec, trials=100, seed=13)
        assert ordering.passed, ordering.witness
        assert criterion.passed, criterion.witness

    def test_ordering_chain(self):
        spec = entropy_spec("renyi", {"alpha": 2.0})
        w = 5
        u, d = Distribution.uniform(w), Distribution.delta(w)
        rng = np.random.default_rng(0)
        p = Distribution(rng.dirichlet(np.ones(w)))
        assert spec.value(u) >= spec.value(p) >= spec.value(d) - 1e-12
        assert spec.value(d) == pytest.approx(0.0, abs=1e-12)


class TestGrowthLaws:
    def test_renyi_solves_to_exponential(self):
        law = solve_growth_law(entropy_spec("renyi", {"alpha": 0.5}), lam=0.25)
        assert law.kind == "exponential"
        assert law.valid and not law.restricted
        assert law.log_w(10.0) == 0.25 * 10.0
        assert law.w(4.0) == pytest.approx(math.exp(1.0))

    def test_zq_power_like_form(self):
        # q < 1 keeps the deformed exponential defined for all N
        q, alpha, lam = 0.5, 0.5, 1.0
        law = solve_growth_law(entropy_spec("zq", {"q": q, "alpha": alpha}), lam=lam)
        assert law.valid
        c = (1 - q) * (1 - alpha)
        for n in (1.0, 10.0, 250.0):
            expected = (1 + c * lam * n) ** (1 / c)
            assert law.w(n) == pytest.approx(expected, rel=1e-12)

    def test_restricted_domain_detected(self):
        # q > 1 with alpha < 1 hits the range boundary of the deformed exponential
        law = solve_growth_law(entropy_spec("zq", {"q": 3.0, "alpha": 0.5}), lam=1.0)
        assert law.restricted and not law.valid

    def test_round_trip_flat_at_large_n(self):
        spec = entropy_spec("renyi", {"alpha": 0.25})
        law = solve_growth_law(spec, lam=0.25)
        assert round_trip_residual(spec, law, 1e4) <= 1e-9

    def test_round_trip_with_rounding_at_small_n(self):
        spec = entropy_spec("zq", {"q": 0.5, "alpha": 0.5})
        law = solve_growth_law(spec, lam=1.0)
        # integer rounding of W dominates the residual at small N but stays small
        assert round_trip_residual(spec, law, 50.0) < 0.05


class TestExtensivityIndex:
    def test_direct_formula(self):
        assert tsallis_qstar(1.0, 2.0) == 0.5
        assert tsallis_qstar(2.0, 1.5) == pytest.approx(2 / 3)

    def test_validation(self):
        with pytest.raises(ParameterError):
            tsallis_qstar(-1.0, 2.0)
        with pytest.raises(ParameterError):
            tsallis_qstar(1.0, 1.0)

    def test_uniform_rate_flattens(self):
        a, rho = 1.0, 2.0
        qstar = tsallis_qstar(a, rho)
        spec = entropy_spec("tsallis_aq", {"a": a, "q": qstar})
        rates = []
        for n in (1e5, 1e6):
            rates.append(spec.uniform_value(n**rho) / n)
        assert abs(rates[1] - rates[0]) / rates[0] < 1e-3
        # the limit rate is a * rho
        assert rates[1] == pytest.approx(a * rho, rel=1e-4)

    def test_closed_form_matches_direct_sum(self):
        spec = entropy_spec("tsallis_aq", {"a": 1.0, "q": 0.5})
        for w in (2, 17, 301):
            direct = spec.value(Distribution.uniform(w))
            assert spec.uniform_value(w) == pytest.approx(direct, rel=1e-12)


class TestConcavityRegions:
    def test_region_predicate(self):
        assert check_concavity_region_saq(1.5, 0.5)
        assert check_concavity_region_saq(7.0, 2.0)
        assert not check_concavity_region_saq(3.0, 0.5)
        assert not check_concavity_region_saq(-1.0, 2.0)

    def test_counterexample_search_finds_violations_outside(self):
        report = saq_concavity_counterexample_search(3.0, 0.5, trials=200, seed=21)
        assert report.failures > 0  # report-only: documents non-concavity

    def test_search_clean_inside_region(self):
        report = saq_concavity_counterexample_search(1.5, 0.5, trials=200, seed=22)
        assert report.failures == 0
