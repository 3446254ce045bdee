"""Multiplicative functions on the unit disk and the distance between them.

A function is specified by its values on prime powers; evaluation anywhere
follows by multiplicativity.  The distance aggregates, prime by prime, how
far two functions' phases disagree, weighted by 1/p; it obeys the triangle
inequality through the scalar inequality checked in eta_triangle_check.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import engine
from .errors import ArgumentError, RangeError

_BLOCK = 1 << 20


class MultiplicativeFunction:
    """A multiplicative function given by its rule on prime powers.

    ``rule(p, k)`` returns the value at p^k.  ``disk_bounded`` declares
    |f(n)| <= 1 for all n, which the distance operations require.  The
    optional vectorized hooks keep the built-ins fast; anything without
    them falls back to factorization via the least-factor table.
    """

    def __init__(self, name, rule, disk_bounded=True, prime_values=None, values_block=None):
        self.name = name
        self.rule = rule
        self.disk_bounded = disk_bounded
        self._prime_values = prime_values
        self._values_block = values_block

    def __repr__(self):
        return f"MultiplicativeFunction({self.name!r})"

    def __call__(self, n):
        """f(n) as the product of the rule over the factorization of n."""
        n = int(n)
        if n < 1:
            raise RangeError(f"f(n) needs n >= 1, got {n}")
        out = complex(1.0)
        for p, k in engine.factorize(n).factors:
            out *= complex(self.rule(p, k))
        return out

    def prime_values(self, ps):
        """Vectorized f(p) over an array of primes."""
        if self._prime_values is not None:
            return self._prime_values(np.asarray(ps, dtype=np.int64))
        return np.array([complex(self.rule(int(p), 1)) for p in ps], dtype=np.complex128)

    def values_block(self, lo, hi):
        """f(n) for n in [lo, hi] as a complex array."""
        lo, hi = int(lo), int(hi)
        if self._values_block is not None:
            return self._values_block(lo, hi)
        table = engine.shared_table(max(hi, 100))
        if table.lpf_bound < hi:
            raise RangeError(f"general evaluation needs a least-factor table up to {hi}")
        lpf = table.least_factor
        out = np.empty(hi - lo + 1, dtype=np.complex128)
        for n in range(lo, hi + 1):
            m, val = n, complex(1.0)
            while m > 1:
                p = int(lpf[m])
                k = 0
                while m % p == 0:
                    m //= p
                    k += 1
                val *= complex(self.rule(p, k))
            out[n - lo] = val
        return out


def mf_one():
    return MultiplicativeFunction(
        "1",
        lambda p, k: 1.0,
        prime_values=lambda ps: np.ones(len(ps), dtype=np.complex128),
        values_block=lambda lo, hi: np.ones(hi - lo + 1, dtype=np.complex128),
    )


def mf_mobius():
    return MultiplicativeFunction(
        "mu",
        lambda p, k: -1.0 if k == 1 else 0.0,
        prime_values=lambda ps: np.full(len(ps), -1.0, dtype=np.complex128),
        values_block=lambda lo, hi: engine.mobius_range(lo, hi).astype(np.complex128),
    )


def mf_nit(t):
    """n -> n^(it) for a fixed real t."""
    t = float(t)

    def rule(p, k):
        return cmath.exp(1j * t * k * math.log(p))

    def prime_values(ps):
        return np.exp(1j * t * np.log(ps.astype(np.float64)))

    def values_block(lo, hi):
        n = np.arange(lo, hi + 1, dtype=np.float64)
        return np.exp(1j * t * np.log(n))

    return MultiplicativeFunction(f"n^({t}i)", rule, prime_values=prime_values,
                                  values_block=values_block)


def mf_character(chi):
    """Wrap a Dirichlet character (completely multiplicative, period q)."""
    vals = chi.values()

    def rule(p, k):
        return complex(vals[p % chi.q]) ** k

    def prime_values(ps):
        return vals[ps % chi.q]

    def values_block(lo, hi):
        return vals[np.arange(lo, hi + 1, dtype=np.int64) % chi.q]

    return MultiplicativeFunction(f"chi[{chi.q},{chi.index}]", rule,
                                  prime_values=prime_values, values_block=values_block)


def mf_divisor_count():
    """tau(n); unbounded, excluded from distance operations."""
    return MultiplicativeFunction("tau", lambda p, k: float(k + 1), disk_bounded=False)


def mf_divisor_sum():
    """sigma(n); unbounded, excluded from distance operations."""
    return MultiplicativeFunction(
        "sigma", lambda p, k: float((p ** (k + 1) - 1) // (p - 1)), disk_bounded=False
    )


def mf_from_prime_values(name, primes, values):
    """Completely multiplicative function with given values on listed primes.

    Primes outside the list get value 1; meant for randomized sweeps where
    only values at primes <= x matter.
    """
    primes = np.asarray(primes, dtype=np.int64)
    values = np.asarray(values, dtype=np.complex128)
    if np.any(np.abs(values) > 1 + 1e-12):
        raise ArgumentError("prime values must lie in the closed unit disk")
    lookup = dict(zip(primes.tolist(), values.tolist()))

    def rule(p, k):
        return lookup.get(p, 1.0) ** k

    def prime_values(ps):
        idx = np.searchsorted(primes, ps)
        idx = np.clip(idx, 0, len(primes) - 1)
        out = np.where(primes[idx] == ps, values[idx], 1.0 + 0j)
        return out

    return MultiplicativeFunction(name, rule, prime_values=prime_values)


def mf_eval(f, n):
    """f(n); kept as a free function to mirror the operation map."""
    return f(n)


def _mean_of_blocks(f, n_max):
    parts_re, parts_im = [], []
    lo = 1
    while lo <= n_max:
        hi = min(lo + _BLOCK - 1, n_max)
        v = f.values_block(lo, hi)
        parts_re.append(float(np.sum(v.real)))
        parts_im.append(float(np.sum(v.imag)))
        lo = hi + 1
    return complex(math.fsum(parts_re), math.fsum(parts_im)) / n_max


def mean_value(f, n_max):
    """(1/N) sum_{n<=N} f(n), compensated across blocks."""
    n_max = int(n_max)
    if n_max < 1:
        raise RangeError(f"mean_value needs N >= 1, got {n_max}")
    return _mean_of_blocks(f, n_max)


def nit_mean_check(t, n_max):
    """Partial mean of n^(it) against the rotating prediction N^(it)/(1+it)."""
    t = float(t)
    n_max = int(n_max)
    if n_max < 10:
        raise RangeError(f"nit_mean_check needs N >= 10, got {n_max}")
    computed = mean_value(mf_nit(t), n_max)
    predicted = cmath.exp(1j * t * math.log(n_max)) / (1 + 1j * t)
    return {"computed": computed, "predicted": predicted, "gap": abs(computed - predicted)}


@dataclass(frozen=True)
class PretentiousDistance:
    f_name: str
    g_name: str
    x: int
    value: float

    @property
    def squared(self):
        return self.value * self.value


def _require_disk(f):
    if not f.disk_bounded:
        raise ArgumentError(f"{f.name} is not bounded by the unit disk")


def distance(f, g, x):
    """Distance between two disk-bounded multiplicative functions up to x.

    Squared value: sum over primes p <= x of (1 - Re f(p) conj(g(p))) / p.
    Symmetric; zero only when the phases match at every prime with |f(p)|=1.
    """
    _require_disk(f)
    _require_disk(g)
    x = int(x)
    if x < 2:
        raise RangeError(f"distance needs x >= 2, got {x}")
    table = engine.shared_table(max(x, 100))
    ps = table.primes_between(1, x)
    fp = f.prime_values(ps)
    gp = g.prime_values(ps)
    terms = (1.0 - (fp * np.conj(gp)).real) / ps
    d2 = max(float(np.sum(terms)), 0.0)
    return PretentiousDistance(f_name=f.name, g_name=g.name, x=x, value=math.sqrt(d2))


def eta(w, y):
    """sqrt(1 - Re(w conj(y))) for points of the closed unit disk."""
    w, y = complex(w), complex(y)
    if abs(w) > 1 + 1e-12 or abs(y) > 1 + 1e-12:
        raise ArgumentError("eta arguments must lie in the closed unit disk")
    return math.sqrt(max(1.0 - (w * y.conjugate()).real, 0.0))


def eta_triangle_check(w, y, z, slack=1e-12):
    """True when eta(w, y) <= eta(w, z) + eta(z, y) within slack."""
    return eta(w, y) <= eta(w, z) + eta(z, y) + slack


def eta_triangle_sweep(count, seed=0):
    """Vectorized triangle check over random disk triples; returns violations.

    The sample mixes interior points, boundary points (|z| = 1), and exact
    zeros to hit the degenerate cases.
    """
    rng = np.random.default_rng(seed)

    def sample(n):
        r = np.sqrt(rng.random(n))
        phase = np.exp(2j * np.pi * rng.random(n))
        pts = r * phase
        kind = rng.random(n)
        pts[kind < 0.1] = np.exp(2j * np.pi * rng.random(int((kind < 0.1).sum())))
        pts[kind > 0.98] = 0.0
        return pts

    w, y, z = sample(count), sample(count), sample(count)

    def eta_arr(a, b):
        return np.sqrt(np.maximum(1.0 - (a * np.conj(b)).real, 0.0))

    lhs = eta_arr(w, y)
    rhs = eta_arr(w, z) + eta_arr(z, y)
    return int(np.count_nonzero(lhs > rhs + 1e-12))


def halasz_ratio(f, x, t, cutoff_cap=10**7):
    """Compare a truncated Dirichlet series against the distance prediction.

    At s = 1 + 1/log(x) + it the series sum_{n<=cutoff} f(n)/n^s is set
    against log(x) * exp(-distance(f, n^it; x)^2); their ratio should sit in
    a bounded band.  The nominal cutoff x^4 (tail <= e^-4 log x) is capped
    at ``cutoff_cap`` terms; the reported tail_bound cutoff^(1-sigma)/(sigma-1)
    accounts for whichever cutoff is used.
    """
    _require_disk(f)
    x = int(x)
    if x < 100:
        raise RangeError(f"halasz_ratio needs x >= 100, got {x}")
    t = float(t)
    if abs(t) > 100:
        raise RangeError(f"halasz_ratio needs |t| <= 100, got {t}")
    sigma = 1.0 + 1.0 / math.log(x)
    cutoff = min(x**4, int(cutoff_cap))
    s = complex(sigma, t)

    parts_re, parts_im = [], []
    lo = 1
    while lo <= cutoff:
        hi = min(lo + _BLOCK - 1, cutoff)
        n = np.arange(lo, hi + 1, dtype=np.float64)
        terms = f.values_block(lo, hi) * np.exp(-s * np.log(n))
        parts_re.append(float(np.sum(terms.real)))
        parts_im.append(float(np.sum(terms.imag)))
        lo = hi + 1
    series = complex(math.fsum(parts_re), math.fsum(parts_im))

    tail_bound = cutoff ** (1.0 - sigma) / (sigma - 1.0)
    d = distance(f, mf_nit(t), x)
    pretentious_mag = math.log(x) * math.exp(-d.squared)
    return {
        "series_mag": abs(series),
        "pretentious_mag": pretentious_mag,
        "ratio": abs(series) / pretentious_mag,
        "tail_bound": tail_bound,
        "cutoff": cutoff,
    }


def distance_min_t(f, x, t_max, grid_step):
    """Grid minimizer of distance(f, n^it; x) over |t| <= t_max.

    Deterministic: ties resolve to the smallest grid t (argmin of the
    ascending grid).
    """
    _require_disk(f)
    grid_step = float(grid_step)
    if grid_step <= 0:
        raise ArgumentError(f"grid_step must be positive, got {grid_step}")
    t_max = float(t_max)
    if t_max < grid_step:
        raise ArgumentError(f"t_max {t_max} smaller than grid_step {grid_step}")
    x = int(x)
    table = engine.shared_table(max(x, 100))
    ps = table.primes_between(1, x).astype(np.float64)
    fp = f.prime_values(ps.astype(np.int64))
    ts = np.arange(-t_max, t_max + grid_step / 2, grid_step)
    phases = np.exp(-1j * np.outer(ts, np.log(ps)))
    d2 = np.maximum((1.0 - (fp[None, :] * phases).real) @ (1.0 / ps), 0.0)
    i = int(np.argmin(d2))
    return {"t_min": float(ts[i]), "d_min": float(math.sqrt(d2[i]))}
