"""Multiplicative functions, means, the distance, and its triangle law."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primelab import calibration, engine, pretentious as pre, progressions
from primelab.errors import ArgumentError

disk_points = st.complex_numbers(max_magnitude=1.0, allow_infinity=False, allow_nan=False)


def random_unimodular(rng, x, name="rnd"):
    ps = engine.shared_table(max(x, 100)).primes_between(1, x)
    vals = np.exp(2j * np.pi * rng.random(len(ps)))
    return pre.mf_from_prime_values(name, ps, vals)


class TestEvaluation:
    def test_mobius_at_30(self):
        assert pre.mf_eval(pre.mf_mobius(), 30) == pytest.approx(-1 + 0j)

    def test_nit_at_10(self):
        f = pre.mf_nit(1.0)
        assert f(10) == pytest.approx(cmath.exp(1j * math.log(10)))

    def test_character_vanishes_on_even(self):
        chi = progressions.character_table(4).characters[1]
        f = pre.mf_character(chi)
        assert f(6) == 0

    def test_one_everywhere(self):
        f = pre.mf_one()
        assert f(1) == 1 and f(360) == 1

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 3000), st.integers(1, 3000))
    def test_multiplicative_on_coprime_pairs(self, m, n):
        if math.gcd(m, n) != 1:
            return
        f = pre.mf_nit(0.7)
        assert f(m * n) == pytest.approx(f(m) * f(n), rel=1e-9)

    def test_unbounded_examples_evaluate(self):
        assert pre.mf_divisor_count()(12) == pytest.approx(6)  # tau(12)
        assert pre.mf_divisor_sum()(12) == pytest.approx(28)  # sigma(12)

    def test_blocks_match_rule(self):
        f = pre.mf_mobius()
        block = f.values_block(1, 50)
        for n in range(1, 51):
            assert block[n - 1] == pytest.approx(f(n))

    def test_general_fallback_block(self):
        raw = pre.MultiplicativeFunction("mu_copy", lambda p, k: -1.0 if k == 1 else 0.0)
        got = raw.values_block(1, 2000)
        want = pre.mf_mobius().values_block(1, 2000)
        assert np.allclose(got, want)


class TestMeanValue:
    def test_constant_one(self):
        assert pre.mean_value(pre.mf_one(), 12345) == pytest.approx(1.0)

    def test_mobius_mean_small(self):
        assert pre.mean_value(pre.mf_mobius(), 10**6) == pytest.approx(212 / 10**6, abs=1e-12)
        assert abs(pre.mean_value(pre.mf_mobius(), 10**6)) <= 0.001

    def test_nit_magnitude(self):
        m = pre.mean_value(pre.mf_nit(1.0), 10**4)
        assert abs(m) == pytest.approx(1 / math.sqrt(2), abs=0.02)

    def test_nit_check_examples(self):
        r0 = pre.nit_mean_check(0.0, 1000)
        assert r0["predicted"] == pytest.approx(1.0)
        assert r0["gap"] <= 1.0 / 1000
        r1 = pre.nit_mean_check(1.0, 10**4)
        assert r1["gap"] <= 0.05
        r2 = pre.nit_mean_check(-1.0, 10**4)
        assert r2["computed"] == pytest.approx(r1["computed"].conjugate(), rel=1e-12)
        assert r2["predicted"] == pytest.approx(r1["predicted"].conjugate(), rel=1e-12)


class TestDistance:
    def test_self_distance_unimodular(self):
        f = pre.mf_nit(0.3)
        assert pre.distance(f, f, 10**4).value <= 1e-7

    def test_mobius_vs_one_at_10(self):
        d = pre.distance(pre.mf_mobius(), pre.mf_one(), 10)
        expected = 2 * (1 / 2 + 1 / 3 + 1 / 5 + 1 / 7)
        assert d.squared == pytest.approx(expected, abs=1e-12)
        assert d.squared == pytest.approx(2.3524, abs=1e-4)

    def test_symmetry(self):
        f, g = pre.mf_mobius(), pre.mf_nit(0.8)
        assert pre.distance(f, g, 5000).value == pytest.approx(
            pre.distance(g, f, 5000).value, abs=1e-14
        )

    def test_monotone_in_x(self, rng):
        f = random_unimodular(rng, 10**4)
        g = pre.mf_one()
        vals = [pre.distance(f, g, x).value for x in (10**2, 10**3, 10**4)]
        assert vals[0] <= vals[1] + 1e-12 and vals[1] <= vals[2] + 1e-12

    def test_rejects_unbounded(self):
        with pytest.raises(ArgumentError):
            pre.distance(pre.mf_divisor_count(), pre.mf_one(), 100)

    def test_triangle_on_builtins(self):
        trio = (pre.mf_mobius(), pre.mf_one(), pre.mf_nit(1.0))
        for x in (10**3, 10**4, 10**5):
            for f, g, h in [
                (trio[0], trio[1], trio[2]),
                (trio[2], trio[0], trio[1]),
                (trio[1], trio[2], trio[0]),
            ]:
                dfh = pre.distance(f, h, x).value
                assert dfh <= pre.distance(f, g, x).value + pre.distance(g, h, x).value + 1e-9

    def test_triangle_on_random_functions(self, rng):
        for x in (10**3, 10**4, 10**5):
            fs = [random_unimodular(rng, x, f"r{i}") for i in range(12)]
            for i in range(0, 12, 3):
                f, g, h = fs[i], fs[i + 1], fs[i + 2]
                dfh = pre.distance(f, h, x).value
                assert dfh <= pre.distance(f, g, x).value + pre.distance(g, h, x).value + 1e-9

    def test_square_vs_mobius_bound(self, rng):
        mu = pre.mf_mobius()
        one = pre.mf_one()
        for x in (10**3, 10**4):
            ps = engine.shared_table(x).primes_between(1, x)
            for i in range(10):
                vals = np.exp(2j * np.pi * rng.random(len(ps)))
                f = pre.mf_from_prime_values(f"f{i}", ps, vals)
                f2 = pre.mf_from_prime_values(f"f2_{i}", ps, vals * vals)
                lhs = pre.distance(f2, one, x).value
                rhs = 2 * pre.distance(f, mu, x).value
                assert lhs <= rhs + 1e-9


class TestEta:
    def test_examples(self):
        assert pre.eta(1, 1) == 0.0
        assert pre.eta(1, -1) == pytest.approx(math.sqrt(2))
        assert pre.eta(1, 1j) == pytest.approx(1.0)

    def test_domain(self):
        with pytest.raises(ArgumentError):
            pre.eta(2.0, 0.5)

    def test_triangle_examples(self):
        assert pre.eta_triangle_check(1, -1, 1j)
        assert pre.eta_triangle_check(0.3 + 0.1j, 0.3 + 0.1j, -0.9)

    @settings(max_examples=300, deadline=None)
    @given(disk_points, disk_points, disk_points)
    def test_triangle_property(self, w, y, z):
        assert pre.eta_triangle_check(w, y, z)

    def test_sweep_million(self):
        assert pre.eta_triangle_sweep(10**6, seed=123) == 0


class TestHalasz:
    def test_band_one(self):
        r = pre.halasz_ratio(pre.mf_one(), 10**4, 0.0)
        lo, hi = calibration.HALASZ_BANDS["one"]
        assert lo <= r["ratio"] <= hi

    def test_band_mobius(self):
        r = pre.halasz_ratio(pre.mf_mobius(), 10**4, 0.0)
        lo, hi = calibration.HALASZ_BANDS["mobius"]
        assert lo <= r["ratio"] <= hi

    def test_band_nit_self(self):
        r = pre.halasz_ratio(pre.mf_nit(1.0), 10**4, 1.0)
        lo, hi = calibration.HALASZ_BANDS["nit"]
        assert lo <= r["ratio"] <= hi
        d = pre.distance(pre.mf_nit(1.0), pre.mf_nit(1.0), 10**4)
        assert d.value <= 1e-7

    def test_tail_bound_reported(self):
        r = pre.halasz_ratio(pre.mf_one(), 10**4, 0.0)
        assert r["tail_bound"] > 0
        assert r["cutoff"] == 10**7  # capped below x^4

    def test_rejects_unbounded(self):
        with pytest.raises(ArgumentError):
            pre.halasz_ratio(pre.mf_divisor_sum(), 10**4, 0.0)


class TestDistanceMinimizer:
    def test_matches_embedded_rotation(self):
        r = pre.distance_min_t(pre.mf_nit(0.5), 10**4, 2.0, 0.01)
        assert r["t_min"] == pytest.approx(0.5, abs=0.01)
        assert r["d_min"] <= 1e-6

    def test_constant_one(self):
        r = pre.distance_min_t(pre.mf_one(), 10**3, 1.0, 0.05)
        assert r["t_min"] == pytest.approx(0.0, abs=1e-12)

    def test_mobius_stays_far(self):
        r = pre.distance_min_t(pre.mf_mobius(), 10**4, 2.0, 0.01)
        assert r["d_min"] >= calibration.MU_MIN_DISTANCE

    def test_bad_grid(self):
        with pytest.raises(ArgumentError):
            pre.distance_min_t(pre.mf_one(), 100, 1.0, 0.0)
        with pytest.raises(ArgumentError):
            pre.distance_min_t(pre.mf_one(), 100, 0.01, 0.5)
