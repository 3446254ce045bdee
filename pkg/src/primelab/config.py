"""Tunable limits, overridable through environment variables."""

import os


def _env_int(name, default):
    raw = os.environ.get(name)
    return int(raw) if raw else default


# Largest limit any sieve-backed operation accepts.
MAX_LIMIT = _env_int("PRIMELAB_MAX_LIMIT", 10**10)

# Working-set cap for materialized tables (bytes).  Streaming passes are
# unaffected; only build_table's stored arrays count against this.
MEMORY_CAP = _env_int("PRIMELAB_MEMORY_CAP", 4 * 2**30)

# Odd-only segment mask size in bytes (covers twice as many integers).
# Results are segment-size invariant; this only tunes cache behaviour.
DEFAULT_SEGMENT_BYTES = 1 << 20

# least_factor is materialized only up to this bound (int32 per entry).
DEFAULT_LPF_BOUND = 10**7

# Trial-division factorization accepts n up to this bound.
FACTORIZE_MAX = 10**12
