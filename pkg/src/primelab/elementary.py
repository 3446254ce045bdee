"""Binomial-coefficient bounds, factorial identities, and error functionals.

The central binomial coefficient machinery (prime blocks, prime-power
valuations), the factorial product identity over the Mobius function with
its truncated variant, the log-factorial estimate, the sieve upper bound
with its doubling rounding term, and the two bounded-error functionals
used to cross-check the counting module.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from . import counting, engine
from .errors import ArgumentError, RangeError


@dataclass(frozen=True)
class BinomialReport:
    n: int
    central_log: float  # log C(2n, n)
    prime_block_log: float  # sum of log p over n < p <= 2n
    max_prime_power: int  # largest p^e dividing C(2n, n)


def _require_prime(p):
    p = int(p)
    f = engine.factorize(p)
    if len(f.factors) != 1 or f.factors[0][1] != 1:
        raise ArgumentError(f"{p} is not prime")
    return p


def factorial_valuation(p, n):
    """Exponent of the prime p in n! (sum of floor(n / p^k))."""
    p = _require_prime(p)
    n = int(n)
    if n < 1:
        raise RangeError(f"factorial_valuation needs n >= 1, got {n}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def kummer_exponent(p, n):
    """Exponent of p in C(2n, n); always satisfies p^e <= 2n."""
    p = _require_prime(p)
    n = int(n)
    if n < 1:
        raise RangeError(f"kummer_exponent needs n >= 1, got {n}")
    e = 0
    q = p
    while q <= 2 * n:
        e += (2 * n) // q - 2 * (n // q)
        q *= p
    return e


def binom_prime_bounds(n):
    """Size and prime-power structure of the central binomial coefficient."""
    n = int(n)
    if not 1 <= n <= 10**7:
        raise RangeError(f"binom_prime_bounds needs 1 <= n <= 1e7, got {n}")
    central = math.lgamma(2 * n + 1) - 2 * math.lgamma(n + 1)

    table = engine.shared_table(max(2 * n, 100))
    block = table.primes_between(n, 2 * n)
    block_log = float(np.sum(np.log(block.astype(np.float64)))) if len(block) else 0.0

    ps = table.primes_between(1, 2 * n).astype(np.int64)
    exp = np.zeros(len(ps), dtype=np.int64)
    q = ps.copy()
    active = np.ones(len(ps), dtype=bool)
    while active.any():
        qa = q[active]
        exp[active] += (2 * n) // qa - 2 * (n // qa)
        q[active] *= ps[active]
        active &= q <= 2 * n
    powered = ps.astype(object) ** exp  # object dtype: exact ints, no overflow
    powered[exp == 0] = 1
    max_pp = int(max(powered)) if len(powered) else 1
    return BinomialReport(
        n=n, central_log=central, prime_block_log=block_log, max_prime_power=max_pp
    )


def log_factorial_estimate(n):
    """{exact, estimate}: direct sum of log k vs n(log n - 1) + 1."""
    n = int(n)
    if n < 2:
        raise RangeError(f"log_factorial_estimate needs n >= 2, got {n}")
    parts = []
    for lo in range(1, n + 1, 1 << 22):
        hi = min(lo + (1 << 22) - 1, n)
        parts.append(float(np.sum(np.log(np.arange(lo, hi + 1, dtype=np.float64)))))
    exact = math.fsum(parts)
    estimate = n * (math.log(n) - 1.0) + 1.0
    return {"exact": exact, "estimate": estimate}


def lcm_identity_check(x):
    """Compare lcm(1..x) against the signed product of floor(x/n)! terms.

    For x <= 200 both sides are also checked as exact integers; the log
    comparison runs for any x up to 1e6.
    """
    x = int(x)
    if not 2 <= x <= 10**6:
        raise RangeError(f"lcm_identity_check needs 2 <= x <= 1e6, got {x}")
    snap = counting.snapshots_at([x], include_mertens=False)[0]
    lhs_log = snap.psi

    mu = engine.mobius_range(1, x)
    quot = x // np.arange(1, x + 1, dtype=np.int64)
    terms = mu.astype(np.float64) * gammaln(quot.astype(np.float64) + 1.0)
    rhs_log = math.fsum(terms.tolist())

    exact = None
    if x <= 200:
        lcm = math.lcm(*range(1, x + 1))
        num = den = 1
        for n in range(1, x + 1):
            m = int(mu[n - 1])
            if m == 1:
                num *= math.factorial(x // n)
            elif m == -1:
                den *= math.factorial(x // n)
        exact = Fraction(num, den) == lcm
    return {"lhs_log": lhs_log, "rhs_log": rhs_log, "exact_match": exact}


def truncated_identity(x, n_cutoff, primes_to_check=()):
    """Log size of prod_{n<=N} floor(x/n)!^mu(n) plus large-prime exponents.

    Requires x > N^2; exponent queries are only meaningful for primes
    p > sqrt(x) (the short product has untracked small-prime content) and
    must equal 1 for p in [x/(N+1), x].
    """
    x, N = int(x), int(n_cutoff)
    if N < 1:
        raise RangeError(f"cutoff must be >= 1, got {N}")
    if x <= N * N:
        raise RangeError(f"truncated identity needs x > N^2 (x={x}, N={N})")
    mu = engine.mobius_range(1, N)
    log_value = math.fsum(
        int(mu[n - 1]) * math.lgamma(x // n + 1) for n in range(1, N + 1)
    )
    root = math.isqrt(x)
    exponents = {}
    for p in primes_to_check:
        p = _require_prime(p)
        if p <= root:
            raise ArgumentError(f"exponent query requires p > sqrt(x); got p={p}")
        exponents[p] = sum(
            int(mu[n - 1]) * factorial_valuation(p, x // n)
            for n in range(1, N + 1)
            if x // n >= p
        )
    return {"log_value": log_value, "exponents": exponents}


def bertrand_check(n):
    """Least prime p with n < p < 2n."""
    n = int(n)
    if n < 2:
        raise RangeError(f"bertrand_check needs n >= 2, got {n}")
    table = engine.shared_table(max(2 * n, 100))
    between = table.primes_between(n, 2 * n - 1)
    if len(between) == 0:
        raise AssertionError(f"no prime in ({n}, {2*n}); sieve invariant broken")
    return int(between[0])


def eratosthenes_bound(x, y):
    """Survivor count of sieving [1, x] by primes <= y, and its upper bound.

    bound = x * prod_{p<=y}(1 - 1/p) + 2^(pi(y)-1); the second term is the
    accumulated rounding slack, which doubles with every sieving prime.
    """
    x, y = int(x), int(y)
    if not 2 <= y <= x:
        raise RangeError(f"eratosthenes_bound needs 2 <= y <= x, got ({x}, {y})")
    if x > 10**8:
        raise RangeError(f"x={x} above the 1e8 dense cap")
    table = engine.shared_table(max(y, 100))
    ps = [int(p) for p in table.primes_between(1, y)]
    if len(ps) > 40:
        raise RangeError(f"pi(y)={len(ps)} > 40 would overflow the rounding term")
    alive = np.ones(x + 1, dtype=bool)
    alive[0] = False
    prod = 1.0
    for p in ps:
        alive[p::p] = False
        prod *= 1.0 - 1.0 / p
    rough = int(np.count_nonzero(alive))
    bound = x * prod + 2.0 ** (len(ps) - 1)
    return {"rough_count": rough, "bound": bound}


def selberg_error(x):
    """Normalized remainder of the weighted prime + prime-pair count.

    Evaluates (log x * theta(x) + sum_{pq<=x} log p log q - 2x log x) / x
    with the pair sum over ordered prime pairs.
    """
    x = int(x)
    if not 10 <= x <= 10**7:
        raise RangeError(f"selberg_error needs 10 <= x <= 1e7, got {x}")
    theta_cum = counting.theta_cumulative(x)
    ps = np.flatnonzero(engine.sieve_upto(x)).astype(np.int64)
    logs = np.log(ps.astype(np.float64))
    pair_sum = float(np.sum(logs * theta_cum[x // ps]))
    lhs = math.log(x) * float(theta_cum[x]) + pair_sum
    return (lhs - 2.0 * x * math.log(x)) / x


def functional_error(x, which):
    """Self-referencing error average for theta or for the Mobius sum.

    which="theta-error": (E(x) log x + sum_{p<=x} E(x/p) log p) / x with
    E(t) = theta(t) - t.  which="mertens": same shape with M in place of E.
    Both stay bounded while the individual terms are of size x log x.
    """
    x = int(x)
    if not 10 <= x <= 10**7:
        raise RangeError(f"functional_error needs 10 <= x <= 1e7, got {x}")
    ps = np.flatnonzero(engine.sieve_upto(x)).astype(np.int64)
    logs = np.log(ps.astype(np.float64))
    quots = x // ps
    if which == "theta-error":
        theta_cum = counting.theta_cumulative(x)
        err_x = float(theta_cum[x]) - x
        err_quots = theta_cum[quots] - quots.astype(np.float64)
        total = err_x * math.log(x) + float(np.sum(err_quots * logs))
    elif which == "mertens":
        m_cum = counting.mertens_cumulative(x)
        total = float(m_cum[x]) * math.log(x) + float(np.sum(m_cum[quots] * logs))
    else:
        raise ArgumentError(f"which must be 'theta-error' or 'mertens', got {which!r}")
    return total / x
