"""Counting functions, the logarithmic integral, and comparison tables."""

import math

import mpmath
import pytest
from scipy.special import expi

from primelab import counting, engine
from primelab.errors import DomainError, RangeError


def direct_theta_psi(x):
    """Independent oracle: explicit log sums over sieved primes and powers."""
    ps = [int(p) for p in engine.build_table(x).primes]
    theta = math.fsum(math.log(p) for p in ps)
    psi = theta
    for p in ps:
        q = p * p
        while q <= x:
            psi += math.log(p)
            q *= p
    return theta, psi


class TestSnapshots:
    def test_x100_against_direct_sums(self):
        theta, psi = direct_theta_psi(100)
        s = counting.count_snapshot(100)
        assert s.theta == pytest.approx(theta, abs=1e-6)
        assert s.psi == pytest.approx(psi, abs=1e-6)
        assert s.pi == 25
        # reference magnitudes
        assert s.theta == pytest.approx(83.7284, abs=5e-4)
        assert s.psi == pytest.approx(94.0453, abs=5e-4)

    def test_pi_1000(self):
        assert counting.count_snapshot(1000).pi == 168

    def test_mertens_hand_sum(self):
        assert counting.count_snapshot(10).mertens == -1

    def test_mertens_bound_and_trend(self):
        snaps = counting.snapshots_at([10**k for k in range(3, 7)])
        for s in snaps:
            assert abs(s.mertens) <= s.x
            assert abs(s.mertens) / s.x < 0.01

    def test_theta_psi_ordering_and_gap(self):
        snaps = counting.snapshots_at([4, 10, 100, 1000, 31623, 10**5])
        for s in snaps:
            assert s.theta <= s.psi
            assert s.psi - s.theta <= 3.0 * math.sqrt(s.x)

    def test_psi_star_at_prime_powers(self):
        s8 = counting.count_snapshot(8)
        assert s8.psi_star == pytest.approx(s8.psi - math.log(8) / 2)
        s7 = counting.count_snapshot(7)
        assert s7.psi_star == pytest.approx(s7.psi - math.log(7) / 2)
        s100 = counting.count_snapshot(100)  # 100 = 2^2 * 5^2 is not a prime power
        assert s100.psi_star == s100.psi

    def test_multi_cutoff_consistency(self):
        # summation split differs between batch and single passes, so the
        # float fields agree to roundoff, the integer fields exactly
        batch = counting.snapshots_at([50, 500, 5000])
        for s in batch:
            single = counting.count_snapshot(s.x)
            assert (single.pi, single.mertens) == (s.pi, s.mertens)
            assert single.theta == pytest.approx(s.theta, abs=1e-9)
            assert single.psi == pytest.approx(s.psi, abs=1e-9)
            assert single.psi_star == pytest.approx(s.psi_star, abs=1e-9)

    def test_rh_style_theta_window(self):
        for s in counting.snapshots_at([10**2, 10**3, 10**4, 10**5, 10**6]):
            assert abs(s.theta - s.x) <= math.sqrt(s.x) * math.log(s.x) ** 2

    def test_chebyshev_band_small(self):
        for s in counting.snapshots_at([10**3, 10**4, 10**5, 10**6]):
            ratio = s.pi * math.log(s.x) / s.x
            assert math.log(2) < ratio < math.log(4)

    def test_range_error(self):
        with pytest.raises(RangeError):
            counting.count_snapshot(1)


class TestLi:
    def test_reference_values(self):
        assert counting.li(2) == pytest.approx(1.04516378, abs=1e-6)
        assert counting.li(10**6) == pytest.approx(78627.549159, abs=1e-4)

    def test_against_exponential_integral(self):
        for k in range(1, 11):
            x = 10.0**k if k >= 3 else (2.0, 17.0, 300.0)[k - 1]
            assert abs(counting.li(x) - float(expi(math.log(x)))) <= 1e-6

    def test_against_mpmath(self):
        mpmath.mp.dps = 30
        for x in (2.0, 100.0, 10.0**7, 10.0**10):
            assert abs(counting.li(x) - float(mpmath.li(x))) <= 1e-6

    def test_overcounts_small(self):
        snaps = counting.snapshots_at([10**3, 10**6], include_mertens=False)
        assert round(counting.li(10**3)) - snaps[0].pi == 10
        assert round(counting.li(10**6)) - snaps[1].pi == 130

    def test_domain_error(self):
        with pytest.raises(DomainError):
            counting.li(1.5)


class TestLegendre:
    def test_reduction_at_zero(self):
        assert counting.legendre_approx(100.0, 0.0) == pytest.approx(100.0 / math.log(100.0))

    def test_historical_errors(self):
        # errors against the 1849 letter's prime counts
        historical = {500000: 41556, 1000000: 78501}
        assert counting.legendre_approx(500000) - historical[500000] == pytest.approx(-23.3, abs=0.1)
        assert counting.legendre_approx(1000000) - historical[1000000] == pytest.approx(42.2, abs=0.1)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            counting.legendre_approx(2.0, 5.0)


class TestMertensLogsum:
    def test_hand_sum_at_10(self):
        v = counting.mertens_logsum(10)
        hand = math.fsum(math.log(p) / p for p in (2, 3, 5, 7))
        assert v == pytest.approx(hand, abs=1e-12)
        assert v == pytest.approx(1.3127, abs=1e-4)
        assert abs(v - math.log(10)) <= 2.0

    def test_single_prime(self):
        assert counting.mertens_logsum(2) == pytest.approx(math.log(2) / 2)

    def test_bound_at_1e6(self):
        v = counting.mertens_logsum(10**6)
        assert abs(v - math.log(10**6)) <= 2.0

    def test_batched_matches_single(self):
        at = counting.mertens_logsum_at([10, 100, 1000])
        for n, v in at.items():
            assert v == pytest.approx(counting.mertens_logsum(n), abs=1e-12)


class TestComparisonTable:
    def test_empty(self):
        assert counting.comparison_table([]) == []

    def test_overcount_column_small(self):
        rows = counting.comparison_table([10**3, 10**4, 10**5, 10**6])
        assert [r.li_overcount for r in rows] == [10, 17, 38, 130]

    def test_legendre_column_uses_modern_pi(self):
        (row,) = counting.comparison_table([10**6])
        assert row.pi == 78498
        expected = counting.legendre_approx(10**6) - 78498
        assert row.legendre_error == pytest.approx(expected, abs=1e-9)


class TestCumulativeArrays:
    def test_theta_cumulative_matches_snapshots(self):
        cum = counting.theta_cumulative(1000)
        snap = counting.count_snapshot(1000, include_mertens=False)
        assert cum[1000] == pytest.approx(snap.theta, abs=1e-9)
        assert cum[10] == pytest.approx(math.log(2) + math.log(3) + math.log(5) + math.log(7))

    def test_mertens_cumulative(self):
        cum = counting.mertens_cumulative(100)
        assert cum[10] == -1
        assert cum[100] == 1
