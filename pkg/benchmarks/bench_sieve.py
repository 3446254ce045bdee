#!/usr/bin/env python3
"""Compare the compiled sieve kernels against the numpy fallback.

Runs the prime-count pass and a Mobius block sweep at matching sizes on
each available backend and prints a small table.  Results must be
identical; only the wall time may differ.

Usage: python benchmarks/bench_sieve.py [limit]  (default 1e8)
"""

import sys
import time

import numpy as np

from primelab import _kernels, engine


def time_prime_pass(limit, kernels):
    t0 = time.time()
    count = 0
    last = 0
    for seg in engine.iter_prime_segments(limit, kernels=kernels):
        seg = seg[seg <= limit]
        count += len(seg)
        if len(seg):
            last = int(seg[-1])
    return time.time() - t0, count, last


def time_mobius(limit, kernels, block=1 << 20):
    base = np.flatnonzero(engine.sieve_upto(int(limit**0.5) + 1)).astype(np.int64)
    t0 = time.time()
    total = 0
    lo = 1
    while lo <= limit:
        hi = min(lo + block - 1, limit)
        total += int(kernels.mobius_block(lo, hi, base).sum(dtype=np.int64))
        lo = hi + 1
    return time.time() - t0, total


def main():
    limit = int(float(sys.argv[1])) if len(sys.argv) > 1 else 10**8
    backends = ["numpy"]
    if _kernels.BACKEND == "cython":
        backends.append("cython")
    print(f"prime pass to {limit:.0e} and mobius sweep to {limit//10:.0e}")
    print(f"{'backend':8} {'primes[s]':>10} {'pi':>12} {'mobius[s]':>10} {'mertens':>10}")
    results = {}
    for name in backends:
        kern = _kernels.get_backend(name)
        tp, count, last = time_prime_pass(limit, kern)
        tm, mert = time_mobius(limit // 10, kern)
        results[name] = (count, last, mert)
        print(f"{name:8} {tp:10.2f} {count:12d} {tm:10.2f} {mert:10d}")
    if len(results) == 2 and results["numpy"] != results["cython"]:
        raise SystemExit("backend results disagree!")


if __name__ == "__main__":
    main()
