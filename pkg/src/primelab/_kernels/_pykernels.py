"""Numpy implementations of the sieve inner loops.

Same contracts as the compiled kernels in ``_ckernels``; selected at import
time by :mod:`primelab._kernels` when the extension is unavailable.
"""

import numpy as np


def mark_odd_segment(mask, low, base_primes):
    """Clear composites in an odd-only sieve segment, in place.

    ``mask[i]`` stands for the odd number ``low + 2*i``.  Every entry with a
    prime factor in ``base_primes`` (ascending, odd) is set to 0; entries
    equal to a base prime survive because marking starts at ``p*p``.
    """
    n = mask.shape[0]
    high = low + 2 * (n - 1)
    for p in base_primes:
        p = int(p)
        start = p * p
        if start > high:
            break
        if start < low:
            start = ((low + p - 1) // p) * p
            if start % 2 == 0:
                start += p
        mask[(start - low) >> 1 :: p] = 0


def mobius_block(lo, hi, base_primes):
    """Mobius values for n in [lo, hi] as an int8 array.

    ``base_primes`` must contain every prime up to sqrt(hi).  Each prime
    flips the sign of its multiples and zeroes multiples of its square; a
    leftover cofactor > 1 after dividing out all small primes is a single
    prime > sqrt(hi) and flips the sign once more.
    """
    n = hi - lo + 1
    mu = np.ones(n, dtype=np.int8)
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    for p in base_primes:
        p = int(p)
        if p * p > hi:
            break
        first = ((lo + p - 1) // p) * p
        sl = slice(first - lo, None, p)
        rem[sl] //= p
        mu[sl] = -mu[sl]
        p2 = p * p
        first2 = ((lo + p2 - 1) // p2) * p2
        if first2 <= hi:
            mu[first2 - lo :: p2] = 0
    leftover = rem > 1
    mu[leftover] = -mu[leftover]
    if lo <= 0:
        mu[: 1 - lo] = 0
    return mu
