"""Prime counting at desk scale.

Subpackages cover the segmented sieve (engine), counting functions and
predictions (counting), binomial/factorial identities (elementary),
multiplicative-function distances (pretentious), Dirichlet series and the
zero-sum formula (zeta), and characters with progressions (progressions).
The compiled sieve kernels are optional; a numpy fallback loads when the
extension is absent (primelab._kernels.BACKEND names the one in use).
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as kernel_backend  # noqa: F401
