"""Value and composition-law checks for every classical entropy family."""

import math

import numpy as np
import pytest

from gek.entropy import (
    Distribution,
    EntropySpec,
    Z_FAMILIES,
    alt_z_entropy,
    boltzmann,
    composition_phi,
    entropy_spec,
    landsberg_vedral,
    power_sum,
    product_distribution,
    renyi,
    tsallis_aq,
    z_ab,
    z_entropy,
    z_k_alpha,
    z_q_alpha,
)
from gek.errors import InputError, ParameterError
from gek.grouplog import AbelGroup, IdentityGroup, KaniadakisGroup, MultiplicativeGroup

RNG = np.random.default_rng(42)


def random_dist(w, rng=RNG):
    return Distribution(rng.dirichlet(np.ones(w)))


# Random admissible parameter draws keyed by family; used wherever a test
# wants "random parameters" rather than a pinned spec.
def random_spec(family, rng):
    alpha = rng.uniform(0.15, 0.9)
    if family == "renyi":
        return entropy_spec("renyi", {"alpha": alpha})
    if family == "zq":
        return entropy_spec("zq", {"q": rng.uniform(0.2, 2.5), "alpha": alpha})
    if family == "zk":
        k = rng.uniform(0.05, 0.9) * rng.choice([-1, 1])
        return entropy_spec("zk", {"k": k, "alpha": alpha})
    if family == "zab":
        a = rng.uniform(0.05, 0.9)
        b = -rng.uniform(0.0, 0.9)
        return entropy_spec("zab", {"a": a, "b": b, "alpha": alpha})
    if family == "tsallis_aq":
        q = rng.uniform(0.2, 2.5)
        while q == 1:
            q = rng.uniform(0.2, 2.5)
        hi = 1 / (1 - q) if q < 1 else 3.0
        return entropy_spec("tsallis_aq", {"a": rng.uniform(0.1, 0.95) * hi, "q": q})
    if family == "landsberg_vedral":
        q = rng.choice([rng.uniform(0.2, 0.9), rng.uniform(1.1, 2.5)])
        return entropy_spec("landsberg_vedral", {"q": float(q)})
    raise ValueError(family)


class TestDistribution:
    def test_validates_total(self):
        with pytest.raises(InputError):
            Distribution([0.5, 0.6])
        Distribution([0.5, 0.6], renormalize=True)

    def test_rejects_negative(self):
        with pytest.raises(InputError):
            Distribution([1.2, -0.2])

    def test_product(self):
        p = Distribution([0.5, 0.5])
        r = Distribution([1 / 3, 2 / 3])
        joint = product_distribution(p, r)
        assert joint.p == pytest.approx([1 / 6, 1 / 3, 1 / 6, 1 / 3])
        assert product_distribution(Distribution.uniform(2), Distribution.uniform(3)).p == pytest.approx(
            np.full(6, 1 / 6)
        )

    def test_delta_product_reorders(self):
        p = random_dist(4)
        joint = product_distribution(Distribution.delta(1), p)
        assert joint.p == pytest.approx(p.p)


class TestPowerSum:
    def test_uniform(self):
        assert power_sum(Distribution.uniform(4), 2.0) == pytest.approx(0.25)

    def test_delta(self):
        for alpha in (0.3, 1.0, 2.7):
            assert power_sum(Distribution.delta(5), alpha) == 1.0

    def test_direct_arithmetic(self):
        p = Distribution([1 / 2, 1 / 3, 1 / 6])
        assert power_sum(p, 2.0) == pytest.approx(14 / 36)

    def test_zero_convention(self):
        with_zero = Distribution([0.5, 0.5, 0.0])
        without = Distribution([0.5, 0.5])
        assert power_sum(with_zero, 0.5) == power_sum(without, 0.5)


class TestBoltzmann:
    def test_uniform(self):
        assert boltzmann(Distribution.uniform(2)) == pytest.approx(math.log(2))

    def test_delta(self):
        assert boltzmann(Distribution.delta(3)) == 0.0

    def test_direct(self):
        assert boltzmann(Distribution([0.5, 0.25, 0.25])) == pytest.approx(1.5 * math.log(2))


class TestZEntropy:
    def test_identity_gives_renyi_bitwise(self):
        g = IdentityGroup()
        for _ in range(50):
            w = int(RNG.integers(2, 9))
            p = random_dist(w)
            alpha = float(RNG.uniform(0.1, 3.0))
            if abs(alpha - 1) < 1e-3:
                continue
            assert z_entropy(g, alpha, p) == renyi(alpha, p)

    def test_uniform_is_log_w(self):
        for alpha in (0.3, 0.7, 2.0):
            assert renyi(alpha, Distribution.uniform(6)) == pytest.approx(math.log(6), rel=1e-13)

    def test_delta_vanishes_for_every_group(self):
        p = Distribution.delta(4)
        for g in (IdentityGroup(), MultiplicativeGroup(0.4), KaniadakisGroup(0.6), AbelGroup(0.5, -0.5)):
            assert z_entropy(g, 0.5, p) == pytest.approx(0.0, abs=1e-14)

    def test_multiplicative_group_matches_direct_formula(self):
        q = 0.7
        g = MultiplicativeGroup(q)
        for _ in range(100):
            p = random_dist(int(RNG.integers(2, 9)))
            alpha = float(RNG.uniform(0.1, 0.95))
            assert z_entropy(g, alpha, p) == pytest.approx(z_q_alpha(q, alpha, p), abs=1e-12)

    def test_alpha_one_rejected(self):
        with pytest.raises(ParameterError):
            z_entropy(IdentityGroup(), 1.0, Distribution.uniform(3))


class TestTsallisAq:
    def test_boltzmann_limit(self):
        p = random_dist(5)
        for q in (1 - 1e-7, 1 + 1e-7):
            assert tsallis_aq(1.0, q, p) == pytest.approx(boltzmann(p), abs=1e-5)

    def test_delta(self):
        assert tsallis_aq(1.5, 0.5, Distribution.delta(3)) == 0.0

    def test_rescaling_identity(self):
        # S_{a,q} = a S_{1,q'} with q' = a(q-1) + 1
        for _ in range(30):
            a = float(RNG.uniform(0.2, 3.0))
            q = float(RNG.uniform(0.2, 2.0))
            if q == 1 or a * (q - 1) + 1 <= 0:
                continue
            p = random_dist(int(RNG.integers(2, 8)))
            qprime = a * (q - 1) + 1
            if qprime == 1:
                continue
            assert tsallis_aq(a, q, p) == pytest.approx(a * tsallis_aq(1.0, qprime, p), abs=1e-12)

    def test_parameter_constraints(self):
        p = Distribution.uniform(2)
        with pytest.raises(ParameterError):
            tsallis_aq(-1.0, 0.5, p)
        with pytest.raises(ParameterError):
            tsallis_aq(1.0, 1.0, p)
        with pytest.raises(ParameterError):
            tsallis_aq(3.0, 0.5, p)  # a(q-1)+1 = -0.5


class TestLandsbergVedral:
    def test_delta(self):
        assert landsberg_vedral(2.0, Distribution.delta(4)) == 0.0

    def test_uniform_q2(self):
        for w in (2, 5, 9):
            assert landsberg_vedral(2.0, Distribution.uniform(w)) == pytest.approx(w - 1)

    def test_composition_law(self):
        q = 1.7
        for _ in range(100):
            p = random_dist(int(RNG.integers(1, 9)))
            r = random_dist(int(RNG.integers(1, 9)))
            sp, sr = landsberg_vedral(q, p), landsberg_vedral(q, r)
            joint = landsberg_vedral(q, product_distribution(p, r))
            expected = sp + sr + (q - 1) * sp * sr
            assert joint == pytest.approx(expected, abs=1e-10, rel=1e-10)


class TestZqAlpha:
    def test_renyi_limit(self):
        p = random_dist(6)
        for q in (1 - 1e-7, 1 + 1e-7):
            assert z_q_alpha(q, 0.5, p) == pytest.approx(renyi(0.5, p), abs=1e-5)

    def test_delta(self):
        assert z_q_alpha(0.5, 0.5, Distribution.delta(2)) == 0.0

    def test_composition_cross_term(self):
        q, alpha = 1.4, 0.6
        for _ in range(100):
            p = random_dist(int(RNG.integers(1, 9)))
            r = random_dist(int(RNG.integers(1, 9)))
            sp, sr = z_q_alpha(q, alpha, p), z_q_alpha(q, alpha, r)
            joint = z_q_alpha(q, alpha, product_distribution(p, r))
            expected = sp + sr + (1 - alpha) * (1 - q) * sp * sr
            assert joint == pytest.approx(expected, abs=1e-10, rel=1e-10)


class TestZkAlpha:
    def test_delta(self):
        assert z_k_alpha(0.3, 0.5, Distribution.delta(2)) == 0.0

    def test_small_k_approaches_renyi(self):
        p = random_dist(5)
        assert z_k_alpha(1e-7, 0.4, p) == pytest.approx(renyi(0.4, p), abs=1e-5)

    def test_composition_with_square_roots(self):
        k, alpha = 0.55, 0.3
        c = k * (1 - alpha)
        for _ in range(100):
            p = random_dist(int(RNG.integers(1, 9)))
            r = random_dist(int(RNG.integers(1, 9)))
            sp, sr = z_k_alpha(k, alpha, p), z_k_alpha(k, alpha, r)
            joint = z_k_alpha(k, alpha, product_distribution(p, r))
            expected = sp * math.sqrt(1 + c * c * sr * sr) + sr * math.sqrt(1 + c * c * sp * sp)
            assert joint == pytest.approx(expected, abs=1e-10, rel=1e-10)

    def test_k_zero_rejected(self):
        with pytest.raises(ParameterError):
            z_k_alpha(0.0, 0.5, Distribution.uniform(2))


class TestZab:
    def test_double_zero_limit_is_renyi(self):
        p = random_dist(5)
        assert z_ab(1e-7, -1e-7, 0.5, p) == pytest.approx(renyi(0.5, p), abs=1e-5)

    def test_b_to_zero_a_one_is_tsallis(self):
        p = random_dist(5)
        alpha = 0.5
        tsallis_of_alpha = (1 - power_sum(p, alpha)) / (alpha - 1)
        assert z_ab(1.0, 1e-9, alpha, p) == pytest.approx(tsallis_of_alpha, abs=1e-5)

    def test_opposite_exponents_equal_deformed_sum_member(self):
        k, alpha = 0.35, 0.5
        for _ in range(50):
            p = random_dist(int(RNG.integers(2, 9)))
            assert z_ab(k, -k, alpha, p) == pytest.approx(z_k_alpha(k, alpha, p), abs=1e-14)

    def test_equal_exponents_rejected(self):
        with pytest.raises(ParameterError):
            z_ab(0.5, 0.5, 0.3, Distribution.uniform(2))


class TestAltForm:
    def test_identity_is_renyi(self):
        p = random_dist(4)
        assert alt_z_entropy(IdentityGroup(), 0.5, p) == renyi(0.5, p)

    def test_delta(self):
        assert alt_z_entropy(MultiplicativeGroup(0.5), 0.5, Distribution.delta(3)) == pytest.approx(
            0.0, abs=1e-14
        )

    def test_differs_from_main_form(self):
        # Regression pair: the two compositions of G with the quotient differ.
        g = MultiplicativeGroup(0.5)
        p = Distribution([0.5, 0.5])
        main = z_entropy(g, 0.5, p)
        alt = alt_z_entropy(g, 0.5, p)
        # power sum is sqrt(2); main = G(ln sqrt(2))/0.5 = 4(2^(1/4) - 1),
        # alt = G(ln sqrt(2)/0.5) = G(ln 2) = 2(sqrt(2) - 1)
        assert main == pytest.approx(4.0 * math.expm1(0.25 * math.log(2)))
        assert alt == pytest.approx(2.0 * math.expm1(0.5 * math.log(2)))
        assert abs(main - alt) > 0.05


class TestCompositionPhi:
    def test_null_composability(self):
        g = MultiplicativeGroup(0.6)
        for x in RNG.uniform(0, 5, size=20):
            assert composition_phi(g, 0.4, x, 0.0) == pytest.approx(x, abs=1e-12)

    def test_identity_additive(self):
        assert composition_phi(IdentityGroup(), 0.5, 2.0, 3.0) == pytest.approx(5.0)

    def test_multiplicative_closed_form(self):
        q, alpha = 0.3, 0.6
        g = MultiplicativeGroup(q)
        for _ in range(50):
            x, y = RNG.uniform(0, 4, size=2)
            expected = x + y + (1 - alpha) * (1 - q) * x * y
            assert composition_phi(g, alpha, x, y) == pytest.approx(expected, rel=1e-12)


class TestEntropySpec:
    def test_round_trip_matches_functions(self):
        p = random_dist(5)
        cases = [
            (entropy_spec("renyi", {"alpha": 0.5}), renyi(0.5, p)),
            (entropy_spec("boltzmann"), boltzmann(p)),
            (entropy_spec("tsallis_aq", {"a": 1.5, "q": 0.7}), tsallis_aq(1.5, 0.7, p)),
            (entropy_spec("landsberg_vedral", {"q": 2.0}), landsberg_vedral(2.0, p)),
            (entropy_spec("zq", {"q": 0.7, "alpha": 0.5}), z_q_alpha(0.7, 0.5, p)),
            (entropy_spec("zk", {"k": 0.3, "alpha": 0.5}), z_k_alpha(0.3, 0.5, p)),
            (entropy_spec("zab", {"a": 0.3, "b": -0.2, "alpha": 0.5}), z_ab(0.3, -0.2, 0.5, p)),
        ]
        for spec, expected in cases:
            assert spec.value(p) == expected

    def test_group_backed_families(self):
        p = random_dist(4)
        spec = entropy_spec("zg", {"g": "kaniadakis", "k": 0.4, "alpha": 0.3})
        assert spec.value(p) == pytest.approx(z_entropy(KaniadakisGroup(0.4), 0.3, p), abs=1e-14)
        alt = entropy_spec("altz", {"g": "tsallis", "q": 0.5, "alpha": 0.3})
        assert alt.value(p) == pytest.approx(alt_z_entropy(MultiplicativeGroup(0.5), 0.3, p), abs=1e-14)

    def test_uniform_closed_forms_match_direct_evaluation(self):
        for family in ("renyi", "zq", "zk", "zab", "tsallis_aq", "landsberg_vedral"):
            for trial in range(10):
                rng = np.random.default_rng(100 + trial)
                spec = random_spec(family, rng)
                w = int(rng.integers(2, 40))
                direct = spec.value(Distribution.uniform(w))
                assert spec.uniform_value(w) == pytest.approx(direct, rel=1e-12), spec.describe()

    def test_regime_marker(self):
        assert entropy_spec("renyi", {"alpha": 0.5}).regime == "concave"
        assert entropy_spec("renyi", {"alpha": 2.0}).regime == "non-concave"
        # every admissible two-parameter trace-form spec lands in a concave region:
        # for q < 1 the a(q-1)+1 > 0 constraint coincides with the region bound
        assert entropy_spec("tsallis_aq", {"a": 1.5, "q": 0.5}).regime == "concave"
        assert entropy_spec("tsallis_aq", {"a": 4.0, "q": 1.5}).regime == "concave"

    def test_bad_specs_rejected(self):
        with pytest.raises(ParameterError):
            entropy_spec("nope")
        with pytest.raises(ParameterError):
            entropy_spec("renyi", {"alpha": 1.0})
        with pytest.raises(ParameterError):
            entropy_spec("renyi", {"alpha": 0.5, "beta": 1.0})
        with pytest.raises(ParameterError):
            entropy_spec("zg", {"alpha": 0.5})
        with pytest.raises(ParameterError):
            entropy_spec("zk", {"k": 1.5, "alpha": 0.5})

    def test_nonnegative_on_valid_distributions(self):
        for family in list(Z_FAMILIES[:-1]) + ["tsallis_aq", "landsberg_vedral"]:
            for trial in range(50):
                rng = np.random.default_rng(trial)
                spec = random_spec(family, rng)
                p = Distribution(rng.dirichlet(np.ones(int(rng.integers(1, 9)))))
                assert spec.value(p) >= -1e-12, spec.describe()


class TestExpansibility:
    def test_exact_for_all_families(self):
        p = random_dist(5)
        specs = [
            entropy_spec("boltzmann"),
            entropy_spec("renyi", {"alpha": 0.5}),
            entropy_spec("tsallis_aq", {"a": 1.2, "q": 1.8}),
            entropy_spec("landsberg_vedral", {"q": 0.5}),
            entropy_spec("zq", {"q": 2.0, "alpha": 0.3}),
            entropy_spec("zk", {"k": -0.4, "alpha": 0.7}),
            entropy_spec("zab", {"a": 0.8, "b": -0.1, "alpha": 0.4}),
            entropy_spec("zg", {"g": "abel", "a": 0.8, "b": -0.1, "alpha": 0.4}),
        ]
        extended = p.append_zero()
        for spec in specs:
            assert spec.value(extended) == spec.value(p), spec.describe()
