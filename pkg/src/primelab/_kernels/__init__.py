"""Hot sieve kernels: compiled extension when built, numpy fallback otherwise.

``BACKEND`` names the implementation in use.  ``get_backend`` exposes both
(when available) so the benchmark can compare them on identical inputs.
"""

from . import _pykernels

try:
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "numpy"

mark_odd_segment = _impl.mark_odd_segment
mobius_block = _impl.mobius_block


def get_backend(name):
    """Return the kernel module for ``name`` ("cython" or "numpy")."""
    if name == "numpy":
        return _pykernels
    if name == "cython":
        if BACKEND != "cython":
            raise ImportError("compiled kernels are not built")
        return _impl
    raise ValueError(f"unknown backend {name!r}")
