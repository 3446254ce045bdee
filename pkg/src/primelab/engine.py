"""Segmented sieve of Eratosthenes and the arithmetic functions built on it.

This module is the single source of arithmetic truth for the rest of the
library: primes, least prime factors, Mobius values, von Mangoldt values,
and exact factorizations all come from here.  Everything is deterministic
and segment-size invariant; no floating point enters the sieve itself.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import config
from ._kernels import mark_odd_segment, mobius_block
from .errors import RangeError, ResourceError


def _check_limit(limit, smallest=2):
    limit = int(limit)
    if limit < smallest or limit > config.MAX_LIMIT:
        raise RangeError(f"limit {limit} outside [{smallest}, {config.MAX_LIMIT}]")
    return limit


def sieve_upto(limit):
    """Dense boolean primality array for 0..limit (plain, unsegmented)."""
    limit = _check_limit(limit)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return is_prime


def iter_prime_segments(limit, segment_bytes=None, kernels=None):
    """Yield ascending int64 arrays of primes covering [2, limit].

    The first yielded array comes from a dense root sieve up to sqrt(limit)
    (it always contains 2); subsequent arrays come from odd-only segments
    of ``segment_bytes`` mask entries each.  The concatenation is identical
    for every segment size.
    """
    limit = _check_limit(limit)
    segment_bytes = int(segment_bytes or config.DEFAULT_SEGMENT_BYTES)
    if segment_bytes < 1024:
        raise RangeError(f"segment_bytes {segment_bytes} is below the 1024 minimum")
    mark = kernels.mark_odd_segment if kernels is not None else mark_odd_segment

    root = max(math.isqrt(limit), 2)
    root_mask = sieve_upto(root)
    root_primes = np.flatnonzero(root_mask).astype(np.int64)
    yield root_primes
    if root >= limit:
        return

    odd_base = root_primes[1:]  # marking kernel wants odd primes only
    low = root + 1 if root % 2 == 0 else root + 2  # first odd above root
    mask = np.empty(segment_bytes, dtype=np.uint8)
    while low <= limit:
        count = min(segment_bytes, (limit - low) // 2 + 1)
        seg = mask[:count]
        seg.fill(1)
        mark(seg, low, odd_base)
        yield (low + 2 * np.flatnonzero(seg)).astype(np.int64)
        low += 2 * count


@dataclass(frozen=True)
class Factorization:
    """Exact factorization n = prod p^e with ascending primes."""

    n: int
    factors: tuple  # of (prime, exponent), exponents >= 1

    def value(self):
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self):
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


@dataclass(frozen=True)
class PrimeTable:
    """Immutable sieved table: primes up to ``limit`` plus least-factor map.

    Safe to share across threads; all arrays are read-only views.
    ``least_factor[n]`` is the smallest prime factor of n for
    2 <= n <= lpf_bound (index 0 and 1 are 0).
    """

    limit: int
    primes: np.ndarray
    least_factor: np.ndarray
    segment_size: int = config.DEFAULT_SEGMENT_BYTES
    lpf_bound: int = field(default=0)

    def pi(self, x):
        """Count of primes <= x (x <= limit)."""
        if x > self.limit:
            raise RangeError(f"pi({x}) beyond table limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))

    def is_prime(self, n):
        n = int(n)
        if n < 2:
            return False
        if n <= self.lpf_bound:
            return int(self.least_factor[n]) == n
        if n > self.limit:
            raise RangeError(f"is_prime({n}) beyond table limit {self.limit}")
        i = np.searchsorted(self.primes, n)
        return i < len(self.primes) and int(self.primes[i]) == n

    def primes_between(self, lo, hi):
        """Array view of primes in (lo, hi]."""
        i = np.searchsorted(self.primes, lo, side="right")
        j = np.searchsorted(self.primes, hi, side="right")
        return self.primes[i:j]


def _lpf_table(limit, primes):
    """least-prime-factor array; assigning multiples from the largest prime
    downward leaves the smallest factor in place, so no masking is needed."""
    lpf = np.zeros(limit + 1, dtype=np.int64)
    ps = primes[primes <= limit]
    for p in ps[::-1]:
        p = int(p)
        lpf[p::p] = p
    return lpf


def build_table(limit, segment_size=None, lpf_bound=None):
    """Sieve everything up to ``limit`` into an immutable PrimeTable."""
    limit = _check_limit(limit)
    segment_size = int(segment_size or config.DEFAULT_SEGMENT_BYTES)
    if lpf_bound is None:
        lpf_bound = min(limit, config.DEFAULT_LPF_BOUND)
    lpf_bound = min(int(lpf_bound), limit)

    # 8 bytes per stored prime + 8 per least-factor entry, against the cap
    est = 8 * int(1.2 * limit / max(math.log(limit), 1.0)) + 8 * lpf_bound
    if est > config.MEMORY_CAP:
        raise ResourceError(
            f"build_table({limit}) needs ~{est/2**20:.0f} MiB, above the "
            f"{config.MEMORY_CAP/2**20:.0f} MiB cap (PRIMELAB_MEMORY_CAP)"
        )

    chunks = list(iter_prime_segments(limit, segment_size))
    primes = np.concatenate(chunks)
    primes = primes[primes <= limit]
    lpf = _lpf_table(lpf_bound, primes)
    primes.setflags(write=False)
    lpf.setflags(write=False)
    return PrimeTable(
        limit=limit,
        primes=primes,
        least_factor=lpf,
        segment_size=segment_size,
        lpf_bound=lpf_bound,
    )


_cached_table = None


def shared_table(limit):
    """Grow-only process-wide table for callers without their own."""
    global _cached_table
    if _cached_table is None or _cached_table.limit < limit:
        _cached_table = build_table(limit)
    return _cached_table


def mobius_range(lo, hi, table=None):
    """mu(n) for n in [lo, hi], as an int8 array indexed n - lo."""
    lo, hi = int(lo), int(hi)
    if not (1 <= lo <= hi) or hi > config.MAX_LIMIT:
        raise RangeError(f"mobius_range bounds [{lo}, {hi}] invalid")
    root = math.isqrt(hi)
    if table is not None and table.limit >= root:
        base = table.primes_between(1, root)
    else:
        base = np.flatnonzero(sieve_upto(max(root, 2))).astype(np.int64)
    return mobius_block(lo, hi, base)


def factorize(n, table=None):
    """Exact factorization by trial division against table primes.

    Accepts 1 <= n <= config.FACTORIZE_MAX; n = 1 gives an empty factor
    list.  Inputs whose square root exceeds the available prime table are
    rejected rather than probabilistically factored.
    """
    n = int(n)
    if n < 1 or n > config.FACTORIZE_MAX:
        raise RangeError(f"factorize({n}) outside [1, {config.FACTORIZE_MAX}]")
    if n == 1:
        return Factorization(n=1, factors=())

    root = math.isqrt(n)
    if table is None or table.limit < min(root, config.DEFAULT_LPF_BOUND):
        table = shared_table(max(root, 100))

    factors = []
    m = n
    if m <= table.lpf_bound:
        while m > 1:
            p = int(table.least_factor[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        return Factorization(n=n, factors=tuple(factors))

    if table.limit < root:
        raise RangeError(
            f"factorize({n}) needs primes up to {root}, table stops at {table.limit}"
        )
    for p in table.primes:
        p = int(p)
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(n=n, factors=tuple(factors))


def mangoldt(n, table=None):
    """log p if n is a prime power p^m, else 0.0."""
    n = int(n)
    if n < 1:
        raise RangeError(f"mangoldt({n}) needs n >= 1")
    if n == 1:
        return 0.0
    f = factorize(n, table)
    if len(f.factors) == 1:
        return math.log(f.factors[0][0])
    return 0.0


def mangoldt_block(lo, hi, table=None):
    """Lambda(n) for n in [lo, hi] as float64, via a prime-power sweep."""
    lo, hi = int(lo), int(hi)
    if not (1 <= lo <= hi) or hi > config.MAX_LIMIT:
        raise RangeError(f"mangoldt_block bounds [{lo}, {hi}] invalid")
    out = np.zeros(hi - lo + 1, dtype=np.float64)
    root = math.isqrt(hi)
    if table is not None and table.limit >= hi:
        for p in table.primes_between(1, hi):
            p = int(p)
            q = p
            while q <= hi:
                if q >= lo:
                    out[q - lo] = math.log(p)
                q *= p
        return out
    # prime powers p^k <= hi with p <= sqrt(hi), then single primes in range
    base = np.flatnonzero(sieve_upto(max(root, 2))).astype(np.int64)
    for p in base:
        p = int(p)
        q = p * p
        while q <= hi:
            if q >= lo:
                out[q - lo] = math.log(p)
            q *= p
    is_comp = np.zeros(hi - lo + 1, dtype=bool)
    for p in base:
        p = int(p)
        first = max(p * p, ((lo + p - 1) // p) * p)
        if first <= hi:
            is_comp[first - lo :: p] = True
    prime_mask = ~is_comp
    if lo == 1:
        prime_mask[0] = False
    idx = np.flatnonzero(prime_mask)
    vals = np.log((idx + lo).astype(np.float64))
    keep = out[idx] == 0.0
    out[idx[keep]] = vals[keep]
    return out


def nth_prime_upper_bound(k):
    """Crude upper bound for the k-th prime, for sizing search sieves."""
    if k < 6:
        return 15
    return int(k * (math.log(k) + math.log(math.log(k)) + 1.1)) + 10
