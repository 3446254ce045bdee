"""Counting functions and the predictions they are compared against.

Provides one-pass snapshots of (pi, theta, psi, psi*, M) at any set of
cutoffs, the principal-value logarithmic integral, Legendre's rational
approximation, and the machinery for the prediction-vs-count tables.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import config, engine
from .errors import DomainError, RangeError


@dataclass(frozen=True)
class CountSnapshot:
    """All five counting statistics at one cutoff, from one sieve pass."""

    x: int
    pi: int
    theta: float
    psi: float
    psi_star: float
    mertens: int


def _theta_small(limit):
    """(primes, cumulative log sums) for theta lookups below ``limit``."""
    ps = np.flatnonzero(engine.sieve_upto(max(limit, 2))).astype(np.int64)
    cum = np.cumsum(np.log(ps.astype(np.float64)))
    return ps, cum


def _theta_lookup(ps, cum, t):
    i = np.searchsorted(ps, int(t), side="right")
    return float(cum[i - 1]) if i else 0.0


def _prime_power_base(x, table=None):
    """Returns p if x is a prime power p^m, else None."""
    if x < 2:
        return None
    f = engine.factorize(x, table)
    return f.factors[0][0] if len(f.factors) == 1 else None


def snapshots_at(xs, include_mertens=True, segment_bytes=None):
    """CountSnapshots at every cutoff in ``xs`` from a single sieve pass.

    psi is assembled as theta(x) + sum_{k>=2} theta(x^(1/k)), so only one
    full-range pass is needed; the k >= 2 terms use a dense root sieve.
    Mertens accumulation is optional because it costs a second block sweep.
    """
    xs = sorted(int(x) for x in xs)
    if not xs:
        return []
    if xs[0] < 2 or xs[-1] > config.MAX_LIMIT:
        raise RangeError(f"snapshot cutoffs must lie in [2, {config.MAX_LIMIT}]")
    top = xs[-1]

    root_ps, root_cum = _theta_small(math.isqrt(top) + 1)

    pi_at = {}
    theta_at = {}
    pi_run = 0
    theta_run = 0.0
    theta_parts = []
    pending = list(xs)
    for seg in engine.iter_prime_segments(top, segment_bytes):
        seg = seg[seg <= top]
        while pending and (len(seg) == 0 or pending[0] < seg[0]):
            x = pending.pop(0)
            pi_at[x] = pi_run
            theta_at[x] = theta_run + math.fsum(theta_parts)
        if len(seg) == 0:
            continue
        cuts = [x for x in pending if x <= seg[-1]]
        if cuts:
            logs = np.log(seg.astype(np.float64))
            cum = np.cumsum(logs)
            for x in cuts:
                i = int(np.searchsorted(seg, x, side="right"))
                pi_at[x] = pi_run + i
                theta_at[x] = theta_run + math.fsum(theta_parts) + (float(cum[i - 1]) if i else 0.0)
                pending.remove(x)
            theta_parts.append(float(cum[-1]))
        else:
            theta_parts.append(float(np.sum(np.log(seg.astype(np.float64)))))
        pi_run += len(seg)
        if len(theta_parts) > 256:
            theta_run += math.fsum(theta_parts)
            theta_parts = []
    theta_final = theta_run + math.fsum(theta_parts)
    for x in pending:
        pi_at[x] = pi_run
        theta_at[x] = theta_final

    mertens_at = dict.fromkeys(xs, 0)
    if include_mertens:
        block = 1 << 20
        base = np.flatnonzero(engine.sieve_upto(math.isqrt(top) + 1)).astype(np.int64)
        run = 0
        lo = 1
        while lo <= top:
            hi = min(lo + block - 1, top)
            mu = engine.mobius_block(lo, hi, base)
            cuts = [x for x in xs if lo <= x <= hi]
            if cuts:
                cum = np.cumsum(mu, dtype=np.int64)
                for x in cuts:
                    mertens_at[x] = run + int(cum[x - lo])
            run += int(mu.sum(dtype=np.int64))
            lo = hi + 1

    table = engine.shared_table(max(math.isqrt(top) + 1, 100))
    out = []
    for x in xs:
        theta = theta_at[x]
        psi = theta
        k = 2
        while True:
            r = int(round(x ** (1.0 / k)))
            r = max(r - 2, 1)
            while (r + 1) ** k <= x:
                r += 1
            if r < 2:
                break
            psi += _theta_lookup(root_ps, root_cum, r)
            k += 1
        base_p = _prime_power_base(x, table)
        psi_star = psi - 0.5 * math.log(x) if base_p is not None else psi
        out.append(
            CountSnapshot(
                x=x,
                pi=pi_at[x],
                theta=theta,
                psi=psi,
                psi_star=psi_star,
                mertens=mertens_at[x],
            )
        )
    return out


def count_snapshot(x, include_mertens=True):
    """Single-cutoff convenience wrapper around :func:`snapshots_at`."""
    return snapshots_at([x], include_mertens=include_mertens)[0]


# Principal-value logarithmic integral.  The integrand 1/log t has one
# singularity at t = 1; a symmetric window (1-d, 1+d) is excised and put
# back as the integral of g(u) = 1/log(1+u) + 1/log(1-u), whose 1/u poles
# cancel analytically (g -> 1 as u -> 0).
_LI_DELTA = 1e-3


def _li_window(u):
    if u == 0.0:
        return 1.0
    return 1.0 / math.log1p(u) + 1.0 / math.log1p(-u)


def li(x):
    """Principal value of the integral of dt/log t from 0 to x."""
    x = float(x)
    if x < 2.0:
        raise DomainError(f"li({x}) requires x >= 2")
    head, _ = quad(lambda t: 1.0 / math.log(t) if t > 0 else 0.0, 0.0, 1.0 - _LI_DELTA,
                   epsabs=1e-11, epsrel=1e-12, limit=200)
    window, _ = quad(_li_window, 0.0, _LI_DELTA, epsabs=1e-12, epsrel=1e-12)
    # remaining piece via t = e^u, dt/log t = e^u/u du: smooth, no poles.
    # Split where the integrand is still moderate so each panel's requested
    # relative tolerance translates into a small absolute error.
    pieces = []
    lo_u = math.log1p(_LI_DELTA)
    for hi_u in (8.0, 16.0, math.log(x)):
        hi_u = min(hi_u, math.log(x))
        if hi_u > lo_u:
            val, _ = quad(lambda u: math.exp(u) / u, lo_u, hi_u,
                          epsabs=1e-12, epsrel=5e-14, limit=400)
            pieces.append(val)
            lo_u = hi_u
    return math.fsum([head, window] + pieces)


def legendre_approx(x, A=1.08366):
    """x / (log x - A); domain requires log x > A."""
    x = float(x)
    if x <= 0 or math.log(x) <= A:
        raise DomainError(f"legendre_approx needs log x > A (x={x}, A={A})")
    return x / (math.log(x) - A)


def mertens_logsum_at(ns, segment_bytes=None):
    """sum_{p <= N} log(p)/p at every cutoff in ``ns``, one pass."""
    ns = sorted(int(n) for n in ns)
    if not ns:
        return {}
    if ns[0] < 2 or ns[-1] > config.MAX_LIMIT:
        raise RangeError(f"cutoffs must lie in [2, {config.MAX_LIMIT}]")
    top = ns[-1]
    out = {}
    run = 0.0
    parts = []
    pending = list(ns)
    for seg in engine.iter_prime_segments(top, segment_bytes):
        seg = seg[seg <= top]
        if len(seg) == 0:
            continue
        vals = np.log(seg.astype(np.float64)) / seg
        cuts = [n for n in pending if n <= seg[-1]]
        if cuts:
            cum = np.cumsum(vals)
            for n in cuts:
                i = int(np.searchsorted(seg, n, side="right"))
                out[n] = run + math.fsum(parts) + (float(cum[i - 1]) if i else 0.0)
                pending.remove(n)
        parts.append(float(np.sum(vals)))
        if len(parts) > 256:
            run += math.fsum(parts)
            parts = []
    total = run + math.fsum(parts)
    for n in pending:
        out[n] = total
    return out


def mertens_logsum(n):
    """sum_{p <= n} log(p)/p."""
    return mertens_logsum_at([n])[int(n)]


@dataclass(frozen=True)
class TableRow:
    x: int
    pi: int
    li_overcount: int
    legendre_error: float


TABLE_HEADER = ("x", "pi", "li_overcount", "legendre_error")


def comparison_table(xs, A=1.08366):
    """Rows (x, pi(x), round(li(x)) - pi(x), legendre(x) - pi(x))."""
    xs = [int(x) for x in xs]
    if not xs:
        return []
    snaps = snapshots_at(xs, include_mertens=False)
    by_x = {s.x: s for s in snaps}
    rows = []
    for x in xs:
        p = by_x[x].pi
        rows.append(
            TableRow(
                x=x,
                pi=p,
                li_overcount=int(round(li(x))) - p,
                legendre_error=legendre_approx(x, A) - p,
            )
        )
    return rows


def theta_cumulative(limit):
    """float64 array T with T[k] = theta(k), 0 <= k <= limit."""
    limit = int(limit)
    if limit > 10**8:
        raise RangeError(f"theta_cumulative({limit}) above the 1e8 dense cap")
    is_p = engine.sieve_upto(limit)
    vals = np.zeros(limit + 1, dtype=np.float64)
    idx = np.flatnonzero(is_p)
    vals[idx] = np.log(idx.astype(np.float64))
    return np.cumsum(vals)


def mertens_cumulative(limit):
    """int64 array M with M[k] = sum_{n<=k} mu(n), 0 <= k <= limit."""
    limit = int(limit)
    if limit > 10**8:
        raise RangeError(f"mertens_cumulative({limit}) above the 1e8 dense cap")
    mu = engine.mobius_range(1, limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    np.cumsum(mu, dtype=np.int64, out=out[1:])
    return out
