# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve inner loops; see _pykernels for the reference semantics."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def mark_odd_segment(cnp.uint8_t[::1] mask, long long low, cnp.int64_t[::1] base_primes):
    """Clear composites in an odd-only sieve segment, in place."""
    cdef Py_ssize_t n = mask.shape[0]
    cdef long long high = low + 2 * (n - 1)
    cdef Py_ssize_t i, j
    cdef long long p, start
    for i in range(base_primes.shape[0]):
        p = base_primes[i]
        start = p * p
        if start > high:
            break
        if start < low:
            start = ((low + p - 1) // p) * p
            if start % 2 == 0:
                start += p
        j = (start - low) >> 1
        while j < n:
            mask[j] = 0
            j += p


def mobius_block(long long lo, long long hi, cnp.int64_t[::1] base_primes):
    """Mobius values for n in [lo, hi] as an int8 array."""
    cdef Py_ssize_t n = <Py_ssize_t>(hi - lo + 1)
    mu_arr = np.ones(n, dtype=np.int8)
    rem_arr = np.arange(lo, hi + 1, dtype=np.int64)
    cdef cnp.int8_t[::1] mu = mu_arr
    cdef cnp.int64_t[::1] rem = rem_arr
    cdef Py_ssize_t i, j
    cdef long long p, p2, first
    for i in range(base_primes.shape[0]):
        p = base_primes[i]
        if p * p > hi:
            break
        first = ((lo + p - 1) // p) * p
        j = <Py_ssize_t>(first - lo)
        while j < n:
            rem[j] //= p
            mu[j] = -mu[j]
            j += p
        p2 = p * p
        first = ((lo + p2 - 1) // p2) * p2
        j = <Py_ssize_t>(first - lo)
        while j < n:
            mu[j] = 0
            j += p2
    for j in range(n):
        if rem[j] > 1:
            mu[j] = -mu[j]
    if lo <= 0:
        for j in range(<Py_ssize_t>min(1 - lo, n)):
            mu[j] = 0
    return mu_arr
