"""Dirichlet series to the right of 1, line integrals, and the zero sum.

Everything here evaluates honestly convergent objects: truncated series
with explicit tail bounds, a truncated line integral for the indicator
kernel, the prime-pair circle identity, and the truncated zero-sum
reconstruction of the prime-power count from an ingested ordinate table.
Zeros are never computed; they are read from a text file.
"""

import cmath
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import counting, engine
from .errors import ArgumentError, DomainError, FormatError, ParseError, RangeError

_BLOCK = 1 << 20


@dataclass(frozen=True)
class SeriesValue:
    """A truncated-series value together with its worst-case tail bound."""

    value: complex
    tail_bound: float


def _check_sigma(s, least=1.0):
    s = complex(s)
    if s.real <= least:
        raise DomainError(f"series diverges: need Re(s) > {least}, got {s.real}")
    return s


def _chunk_sum(fn, n_max):
    parts_re, parts_im = [], []
    lo = 1
    while lo <= n_max:
        hi = min(lo + _BLOCK - 1, n_max)
        v = fn(lo, hi)
        parts_re.append(float(np.sum(v.real)))
        parts_im.append(float(np.sum(v.imag)))
        lo = hi + 1
    return complex(math.fsum(parts_re), math.fsum(parts_im))


def zeta_eval(s, terms=10**6):
    """Truncated zeta series with an integral tail correction.

    value = sum_{n<=terms} n^(-s) + terms^(1-s)/(s-1); the reported bound
    |s| * terms^(-sigma) dominates the omitted Euler-Maclaurin remainder.
    """
    s = _check_sigma(s)
    terms = int(terms)
    if terms < 10:
        raise RangeError(f"zeta_eval needs terms >= 10, got {terms}")

    def block(lo, hi):
        n = np.arange(lo, hi + 1, dtype=np.float64)
        return np.exp(-s * np.log(n))

    partial = _chunk_sum(block, terms)
    correction = terms ** (1.0 - s) / (s - 1.0)
    return SeriesValue(
        value=partial + correction,
        tail_bound=abs(s) * terms ** (-s.real),
    )


def euler_product_check(s, prime_cutoff):
    """Truncated Euler product against the series evaluation of zeta."""
    s = complex(s)
    if s.real < 1.2:
        raise DomainError(f"euler_product_check needs Re(s) >= 1.2, got {s.real}")
    prime_cutoff = int(prime_cutoff)
    table = engine.shared_table(max(prime_cutoff, 100))
    ps = table.primes_between(1, prime_cutoff).astype(np.float64)
    log_prod = complex(0.0)
    for i in range(0, len(ps), _BLOCK):
        chunk = ps[i : i + _BLOCK]
        log_prod -= np.sum(np.log1p(-np.exp(-s * np.log(chunk))))
    product = cmath.exp(log_prod)
    series = zeta_eval(s, terms=10**6).value
    return {"series": series, "product": product, "gap": abs(series - product)}


def log_deriv_eval(s, terms=10**6):
    """Truncated series for the negated logarithmic derivative of zeta.

    value = sum_{n<=terms} Lambda(n) n^(-s); tail bound
    log(terms) * terms^(1-sigma) / (sigma - 1).
    """
    s = _check_sigma(s)
    terms = int(terms)
    if terms < 10:
        raise RangeError(f"log_deriv_eval needs terms >= 10, got {terms}")

    def block(lo, hi):
        lam = engine.mangoldt_block(lo, hi)
        n = np.arange(lo, hi + 1, dtype=np.float64)
        return lam * np.exp(-s * np.log(n))

    sigma = s.real
    return SeriesValue(
        value=_chunk_sum(block, terms),
        tail_bound=math.log(terms) * terms ** (1.0 - sigma) / (sigma - 1.0),
    )


def perron_indicator(z, sigma, t_cap, delta_target=1e-4):
    """Truncated line integral of z^s / s, normalized by 2*pi.

    Converges to 0 / 0.5 / 1 as z is below / at / above 1.  The integrand
    is even in t, so Simpson refinement runs on [0, T] with the finest
    steps where the integrand peaks (t near 0); the step halves until the
    quadrature delta drops below ``delta_target``.
    """
    z = float(z)
    sigma = float(sigma)
    t_cap = float(t_cap)
    if z <= 0 or sigma <= 0:
        raise DomainError(f"perron_indicator needs z > 0 and sigma > 0, got ({z}, {sigma})")
    if t_cap < 10:
        raise RangeError(f"perron_indicator needs T >= 10, got {t_cap}")
    log_z = math.log(z)
    amp = z**sigma

    def integrand(t):
        return amp * (sigma * np.cos(t * log_z) + t * np.sin(t * log_z)) / (sigma * sigma + t * t)

    n = 1 << 12
    prev = None
    while n <= 1 << 24:
        t = np.linspace(0.0, t_cap, n + 1)
        f = integrand(t)
        h = t_cap / n
        simpson = h / 3.0 * (f[0] + f[-1] + 4.0 * f[1:-1:2].sum() + 2.0 * f[2:-1:2].sum())
        est = simpson / math.pi
        if prev is not None and abs(est - prev) < delta_target:
            return est
        prev = est
        n *= 2
    raise ArgumentError(
        f"perron_indicator did not stabilize below {delta_target} at 2^24 points"
    )


@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive ordinates of zeros on the half line."""

    ordinates: np.ndarray
    source: str

    def __len__(self):
        return len(self.ordinates)

    def up_to(self, t_cap):
        """Ordinates <= t_cap as an array view."""
        i = np.searchsorted(self.ordinates, t_cap, side="right")
        return self.ordinates[:i]


def load_zeros(path):
    """Parse a zeros file: one positive decimal ordinate per line, ascending."""
    ords = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                val = float(line)
            except ValueError:
                raise ParseError(f"not a decimal ordinate: {line!r}", lineno) from None
            if not math.isfinite(val) or val <= 0:
                raise ParseError(f"ordinate must be positive and finite: {line!r}", lineno)
            ords.append(val)
    arr = np.asarray(ords, dtype=np.float64)
    if len(arr) > 1 and np.any(np.diff(arr) <= 0):
        bad = int(np.flatnonzero(np.diff(arr) <= 0)[0]) + 2
        raise FormatError(f"ordinates not strictly ascending at line {bad}")
    arr.setflags(write=False)
    return ZeroTable(ordinates=arr, source=str(path))


def bundled_zeros():
    """The zero table shipped with the package (first 10^4 ordinates)."""
    path = resources.files("primelab.data").joinpath("zeta_zeros_10k.txt")
    with resources.as_file(path) as p:
        return load_zeros(p)


def explicit_psi(x, zeros, t_cap=None):
    """Reconstruct the prime-power count from a truncated zero sum.

    approx = x - sum_{gamma <= T} 2 Re(x^rho / rho) - log(2 pi) with
    rho = 1/2 + i*gamma (conjugate pairs folded into the factor 2); the
    constant is the s = 0 residue term.  Returns approx, the sieved truth
    psi*(x), and their difference.
    """
    x = float(x)
    if x < 10:
        raise RangeError(f"explicit_psi needs x >= 10, got {x}")
    if len(zeros) == 0:
        raise ArgumentError("explicit_psi needs a nonempty zero table")
    if t_cap is None:
        t_cap = float(zeros.ordinates[-1])
    if t_cap > zeros.ordinates[-1]:
        raise ArgumentError(
            f"T={t_cap} exceeds the table's last ordinate {zeros.ordinates[-1]}"
        )
    gam = zeros.up_to(t_cap)
    rho = 0.5 + 1j * gam
    terms = 2.0 * (np.exp(rho * math.log(x)) / rho).real
    # fixed-block reduction keeps the sum order deterministic
    zero_sum = math.fsum(
        float(np.sum(terms[i : i + 4096])) for i in range(0, len(terms), 4096)
    )
    approx = x - zero_sum - math.log(2.0 * math.pi)
    truth = counting.snapshots_at([int(x)], include_mertens=False)[0].psi_star
    return {"approx": approx, "truth": truth, "error": approx - truth}


def goldbach_check(n):
    """Ordered prime-pair representations of n, counted two ways.

    direct: scan primes p <= n/2 and test n - p.  circle: discrete Fourier
    transform of the prime indicator at M > 2n sample points; exact by
    aliasing because every pair sum is at most 2n < M.  The two counts
    must agree exactly.
    """
    n = int(n)
    if n % 2 or not 4 <= n <= 10**6:
        raise ArgumentError(f"goldbach_check needs even n in [4, 1e6], got {n}")
    is_p = engine.sieve_upto(n)
    ps = np.flatnonzero(is_p)
    half = ps[ps <= n // 2]
    partners = is_p[(n - half).astype(np.int64)]
    direct = 2 * int(np.count_nonzero(partners))
    if is_p[n // 2] and is_p[n - n // 2]:
        direct -= 1  # p = q = n/2 counted once

    m = 1 << (2 * n).bit_length()  # strictly greater than 2n
    ind = np.zeros(m, dtype=np.float64)
    ind[ps] = 1.0
    spec = np.fft.rfft(ind)
    counts = np.fft.irfft(spec * spec, m)
    circle = int(round(float(counts[n])))
    if direct != circle:
        raise AssertionError(f"pair-count identity broke at n={n}: {direct} != {circle}")
    return {"direct": direct, "circle": circle}


def prh_bound_check(k, s, terms=10**6, eps=1.0):
    """k-th derivative magnitude of the pole-corrected log derivative.

    magnitude = |(-1)^(k+1) sum Lambda(n) (log n)^k n^(-s)
                 + (-1)^k k! / (s-1)^(k+1)|, compared against the budget
    k! 2^k (1 + t^eps).  Only finiteness is asserted; the ratio is the
    empirically implied constant.
    """
    k = int(k)
    if not 1 <= k <= 20:
        raise RangeError(f"prh_bound_check needs 1 <= k <= 20, got {k}")
    s = _check_sigma(s)
    if s.real >= 2.0:
        raise RangeError(f"prh_bound_check expects sigma in (1, 2), got {s.real}")
    terms = int(terms)

    def block(lo, hi):
        lam = engine.mangoldt_block(lo, hi)
        logn = np.log(np.arange(lo, hi + 1, dtype=np.float64))
        return lam * logn**k * np.exp(-s * logn)

    series = _chunk_sum(block, terms)
    value = (-1.0) ** (k + 1) * series + (-1.0) ** k * math.factorial(k) / (s - 1.0) ** (k + 1)
    t = abs(s.imag)
    budget = math.factorial(k) * 2.0**k * (1.0 + t**eps)
    magnitude = abs(value)
    return {"magnitude": magnitude, "budget": budget, "ratio": magnitude / budget}
