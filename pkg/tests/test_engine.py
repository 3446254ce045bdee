"""Sieve engine: primality, Mobius, von Mangoldt, factorization."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primelab import engine
from primelab.errors import RangeError


def trial_division_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def mobius_oracle(n):
    """Direct factorization, no sieve involved."""
    if n == 1:
        return 1
    mu = 1
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
    if n > 1:
        mu = -mu
    return mu


class TestBuildTable:
    def test_small_counts(self):
        t = engine.build_table(100)
        assert t.pi(10) == 4
        assert t.pi(100) == 25
        assert list(t.primes[:4]) == [2, 3, 5, 7]

    def test_reference_counts(self, table_1e6):
        assert table_1e6.pi(10**3) == 168
        assert table_1e6.pi(10**6) == 78498

    def test_strictly_increasing(self, table_1e6):
        assert np.all(np.diff(table_1e6.primes) > 0)

    def test_every_entry_prime_by_trial_division(self):
        t = engine.build_table(10**4)
        for p in t.primes:
            assert trial_division_prime(int(p))

    def test_least_factor_divides_and_is_prime(self, table_1e6):
        lf = table_1e6.least_factor
        ns = np.arange(2, table_1e6.lpf_bound + 1)
        assert np.all(ns % lf[2:] == 0)
        sample = np.random.default_rng(7).integers(2, table_1e6.lpf_bound, 300)
        for n in sample:
            assert trial_division_prime(int(lf[n]))

    def test_range_errors(self):
        with pytest.raises(RangeError):
            engine.build_table(1)
        with pytest.raises(RangeError):
            engine.build_table(10**11)

    def test_deterministic(self):
        a = engine.build_table(10**4)
        b = engine.build_table(10**4)
        assert np.array_equal(a.primes, b.primes)

    def test_immutable(self, table_1e6):
        with pytest.raises(ValueError):
            table_1e6.primes[0] = 4


class TestSegmentation:
    def test_segment_size_invariance(self):
        limit = 10**7
        reference = None
        for seg_bytes in (1 << 14, 1 << 18, 1 << 20, 777_216):
            parts = list(engine.iter_prime_segments(limit, seg_bytes))
            primes = np.concatenate(parts)
            primes = primes[primes <= limit]
            if reference is None:
                reference = primes
            else:
                assert np.array_equal(reference, primes)

    def test_tiny_limits(self):
        for limit in (2, 3, 4, 5, 10):
            primes = np.concatenate(list(engine.iter_prime_segments(limit)))
            primes = primes[primes <= limit]
            expected = [p for p in range(2, limit + 1) if trial_division_prime(p)]
            assert list(primes) == expected


class TestMobius:
    def test_examples(self):
        mu = engine.mobius_range(1, 30)
        assert mu[0] == 1  # empty product
        assert mu[3] == 0  # 4 = 2^2
        assert mu[29] == -1  # 30 = 2*3*5

    def test_against_oracle_random(self, rng):
        ns = rng.integers(1, 10**8, 10**4)
        for n in np.unique(ns):
            n = int(n)
            got = engine.mobius_range(n, n)[0]
            assert got == mobius_oracle(n), n

    def test_block_spanning_ranges(self):
        full = engine.mobius_range(1, 3000)
        part = engine.mobius_range(1500, 2500)
        assert np.array_equal(full[1499:2500], part)

    def test_range_errors(self):
        with pytest.raises(RangeError):
            engine.mobius_range(10, 5)
        with pytest.raises(RangeError):
            engine.mobius_range(0, 5)


class TestMangoldt:
    def test_examples(self):
        assert engine.mangoldt(8) == pytest.approx(math.log(2))
        assert engine.mangoldt(6) == 0.0
        assert engine.mangoldt(7) == pytest.approx(math.log(7))
        assert engine.mangoldt(1) == 0.0

    def test_block_agrees_with_scalar(self):
        block = engine.mangoldt_block(1, 500)
        for n in range(1, 501):
            assert block[n - 1] == pytest.approx(engine.mangoldt(n)), n

    def test_block_offset_window(self):
        block = engine.mangoldt_block(900, 1100)
        for n in (961, 1013, 1024, 1000):
            assert block[n - 900] == pytest.approx(engine.mangoldt(n)), n


class TestFactorize:
    def test_known_factorizations(self):
        assert engine.factorize(676567).factors == ((619, 1), (1093, 1))
        assert engine.factorize(676589).factors == ((676589, 1),)
        assert engine.factorize(2520).factors == ((2, 3), (3, 2), (5, 1), (7, 1))

    def test_unit(self):
        assert engine.factorize(1).factors == ()

    def test_reconstruction_exhaustive_1e6(self, table_1e6):
        for n in range(2, 10**6 + 1, 997):  # stride keeps runtime low
            assert engine.factorize(n, table_1e6).value() == n
        # dense sweep on a smaller window
        for n in range(2, 20000):
            assert engine.factorize(n, table_1e6).value() == n

    def test_large_semiprime(self):
        p, q = 999983, 999979
        f = engine.factorize(p * q)
        assert f.factors == ((q, 1), (p, 1)) or f.factors == ((min(p, q), 1), (max(p, q), 1))

    def test_range_errors(self):
        with pytest.raises(RangeError):
            engine.factorize(0)
        with pytest.raises(RangeError):
            engine.factorize(10**12 + 1)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=1, max_value=10**9))
    def test_roundtrip_property(self, n):
        f = engine.factorize(n)
        assert f.value() == n
        for p, e in f.factors:
            assert e >= 1
            assert trial_division_prime(p)
        assert [p for p, _ in f.factors] == sorted(p for p, _ in f.factors)


class TestKernelBackends:
    def test_backends_agree(self):
        from primelab import _kernels

        pyk = _kernels.get_backend("numpy")
        try:
            cyk = _kernels.get_backend("cython")
        except ImportError:
            pytest.skip("compiled kernels not built")
        base = np.flatnonzero(engine.sieve_upto(1000))[1:].astype(np.int64)  # odd primes
        for low, n in ((3, 5000), (1_000_001, 4096), (999_999_937 - 4096, 4096)):
            a = np.ones(n, dtype=np.uint8)
            b = np.ones(n, dtype=np.uint8)
            pyk.mark_odd_segment(a, low, base)
            cyk.mark_odd_segment(b, low, base)
            assert np.array_equal(a, b), low
        base_all = np.flatnonzero(engine.sieve_upto(1000)).astype(np.int64)
        for lo, hi in ((1, 10_000), (999_000, 1_000_000)):
            assert np.array_equal(
                pyk.mobius_block(lo, hi, base_all), cyk.mobius_block(lo, hi, base_all)
            )

    def test_active_backend_named(self):
        from primelab import _kernels

        assert _kernels.BACKEND in ("cython", "numpy")
