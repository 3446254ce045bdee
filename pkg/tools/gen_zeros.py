#!/usr/bin/env python3
"""Generate the bundled table of nontrivial zeta-zero ordinates.

One-off data-generation tool; the library itself never computes zeros, it
only ingests the file this script writes (one ascending ordinate per line).

Method: the first 30 ordinates come from mpmath.zetazero.  Above t ~ 100 a
vectorized Riemann-Siegel Z(t) (main sum plus the first three remainder
terms) locates sign changes on a 0.02-step grid, and vectorized bisection
refines them.  The remainder terms keep |Z| errors below ~1e-6 there, so
refined ordinates are good to ~1e-6 (worst case ~1e-5 at near-degenerate
sign changes).  Every run validates itself:

  * the counting function N(T) inferred from found zeros stays within
    |S(T)| <= 2.2 of the Riemann-von Mangoldt main term (a missed zero
    shifts S by 2, so misses are detected);
  * spot checks against mpmath.zetazero at several indices must agree
    to 1e-4.

Usage: python tools/gen_zeros.py [count] [outfile]
Defaults: 10000 zeros -> src/primelab/data/zeta_zeros_10k.txt
"""

import sys
import time

import mpmath
import numpy as np
import sympy as sp

TWO_PI = 2.0 * np.pi

# Riemann-Siegel remainder coefficients C0, C1, C2 as functions of the
# fractional part p of sqrt(t/2pi).  They are built symbolically (to avoid
# transcription slips in the high-order derivatives) but evaluated through
# Chebyshev fits: the raw expressions carry cos(2*pi*p)**k denominators
# whose removable singularities at p = 1/4, 3/4 destroy float64 accuracy
# in a wide window, so each coefficient is sampled at 50-digit precision
# and refit.  The functions are analytic on [0, 1], hence the fits converge
# geometrically; degree 120 leaves residuals ~1e-14.


def _cheb_fit(expr, var, deg=120, samples=400):
    fn = sp.lambdify(var, expr, "mpmath")
    mpmath.mp.dps = 50
    nodes = 0.5 + 0.5 * np.cos(np.pi * (np.arange(samples) + 0.5) / samples)
    vals = np.array([float(fn(mpmath.mpf(x))) for x in nodes])
    return np.polynomial.chebyshev.Chebyshev.fit(nodes, vals, deg, domain=[0.0, 1.0])


_p = sp.symbols("p")
_Psi = sp.cos(2 * sp.pi * (_p**2 - _p - sp.Rational(1, 16))) / sp.cos(2 * sp.pi * _p)
C0 = _cheb_fit(_Psi, _p)
C1 = _cheb_fit(-sp.diff(_Psi, _p, 3) / (96 * sp.pi**2), _p)
C2 = _cheb_fit(
    sp.diff(_Psi, _p, 2) / (64 * sp.pi**2) + sp.diff(_Psi, _p, 6) / (18432 * sp.pi**4), _p
)


def rs_theta(t):
    """Asymptotic phase theta(t); error < 1e-10 for t > 50."""
    return t / 2 * np.log(t / TWO_PI) - t / 2 - np.pi / 8 + 1 / (48 * t) + 7 / (5760 * t**3)


def rs_z(t):
    """Riemann-Siegel Z on a float64 array, vectorized over t."""
    t = np.asarray(t, dtype=np.float64)
    tau = np.sqrt(t / TWO_PI)
    nmax = tau.astype(np.int64)
    frac = tau - nmax
    n = np.arange(1, int(nmax.max()) + 1, dtype=np.float64)
    phases = rs_theta(t)[:, None] - t[:, None] * np.log(n)[None, :]
    terms = np.cos(phases) / np.sqrt(n)[None, :]
    terms[n[None, :] > nmax[:, None]] = 0.0
    main = 2.0 * terms.sum(axis=1)
    rem = C0(frac) + C1(frac) / tau + C2(frac) / tau**2
    rem *= np.where(nmax % 2 == 1, 1.0, -1.0) * tau**-0.5
    return main + rem


def rs_z_chunked(t, chunk=40000):
    out = np.empty_like(t)
    for i in range(0, len(t), chunk):
        out[i : i + chunk] = rs_z(t[i : i + chunk])
    return out


def bracket_zeros(lo, hi, step):
    """Sign-change intervals of Z on a uniform grid over [lo, hi]."""
    grid = np.arange(lo, hi, step)
    z = rs_z_chunked(grid)
    flips = np.nonzero(np.sign(z[:-1]) * np.sign(z[1:]) < 0)[0]
    return grid[flips], grid[flips + 1]


def refine(lo, hi, iters=55):
    """Vectorized bisection; lo/hi arrays must bracket simple zeros."""
    flo = rs_z_chunked(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fmid = rs_z_chunked(mid)
        take_left = np.sign(flo) * np.sign(fmid) < 0
        hi = np.where(take_left, mid, hi)
        lo = np.where(take_left, lo, mid)
        flo = np.where(take_left, flo, fmid)
    return 0.5 * (lo + hi)


def riemann_von_mangoldt_s(ordinates, offset):
    """S(T) just above each found zero, assuming it is zero number k."""
    k = np.arange(1, len(ordinates) + 1) + offset
    return k - rs_theta(ordinates) / np.pi - 1.0


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    out = sys.argv[2] if len(sys.argv) > 2 else "src/primelab/data/zeta_zeros_10k.txt"

    t0 = time.time()
    mpmath.mp.dps = 18
    low = [float(mpmath.zetazero(n).imag) for n in range(1, 31)]
    print(f"[{time.time()-t0:6.1f}s] first 30 ordinates via mpmath, last={low[-1]:.6f}")

    # scan a little past the expected height of zero number `count`
    est_top = float(mpmath.findroot(lambda t: rs_theta(float(t)) / np.pi + 1 - count, count))
    scan_top = est_top + 40.0
    step = 0.02
    while True:
        lo_b, hi_b = bracket_zeros(low[-1] + 0.5, scan_top, step)
        zeros = refine(lo_b, hi_b)
        ords = np.concatenate([np.array(low), zeros])
        s_vals = riemann_von_mangoldt_s(ords[30:], 30)
        if np.abs(s_vals).max() <= 2.2:
            break
        step /= 4.0
        print(f"  count check failed (max|S|={np.abs(s_vals).max():.2f}); rescanning at step {step}")
        if step < 1e-4:
            raise RuntimeError("could not reconcile zero count with Riemann-von Mangoldt")
    print(f"[{time.time()-t0:6.1f}s] {len(ords)} zeros located, max|S|={np.abs(s_vals).max():.2f}")

    if len(ords) < count:
        raise RuntimeError(f"only found {len(ords)} zeros, wanted {count}")
    ords = ords[:count]
    assert np.all(np.diff(ords) > 0), "ordinates not strictly ascending"

    for idx in sorted({31, 100, min(1000, count), min(5000, count), count}):
        ref = float(mpmath.zetazero(idx).imag)
        err = abs(ords[idx - 1] - ref)
        print(f"  spot check #{idx}: {ords[idx-1]:.8f} vs {ref:.8f} (err {err:.2e})")
        assert err < 1e-4, f"zero #{idx} off by {err}"

    with open(out, "w") as fh:
        for g in ords:
            fh.write(f"{g:.8f}\n")
    print(f"[{time.time()-t0:6.1f}s] wrote {count} ordinates to {out}")


if __name__ == "__main__":
    main()
