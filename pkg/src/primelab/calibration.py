"""Frozen empirical constants for the qualitative bounded-error claims.

The source statements assert boundedness without naming constants.  Each
value below was measured once on the reference grid, given a safety
margin, and committed; the test suite regression-checks against these,
so a drift in any underlying computation shows up as a failure.
"""

# |selberg_error(x)| on x in {1e3..1e6}: observed ~3.67, flat.
SELBERG_ERROR_BOUND = 5.0

# |functional_error(x, which)| on the same grid: observed <= 1.97 (theta)
# and <= 0.02 (mertens).  One shared bound, matching the example level.
FUNCTIONAL_ERROR_BOUND = 10.0

# Ratio bands for halasz_ratio at x = 1e4 (observed 0.89 / 1.59 / 0.89).
HALASZ_BANDS = {
    "one": (0.1, 10.0),
    "mobius": (0.01, 100.0),
    "nit": (0.1, 10.0),
}

# |explicit_psi(100) - psi*(100)| with the first 100 ordinates: observed 0.02.
EXPLICIT_PSI_X100_TOL = 5.0

# |explicit_psi(x) - psi*(x)| / x with the first 1e4 ordinates.
EXPLICIT_PSI_REL_TOL = 0.05

# Grid minimum of distance(mu, n^it; 1e4) over |t| <= 2: observed 1.49.
MU_MIN_DISTANCE = 1.0

# |mean of mu(n) chi(n)| at N = 1e6 for small moduli: observed <= 5e-4.
MU_CHI_MEAN_BOUND = 1e-2
