"""Complex-plane special functions used by the dynamics and approximation layers.

All functions are pure and reentrant: no global mutable state, safe for
concurrent use.  Values are always finite; overflow raises OverflowError
instead of returning inf.
"""

from .airy import airy, airy_all
from .bessel import bessel_j
from .erf import erfc
from .hyp import hyp2f3, term_ratio
from .pcf import pcf, pcf_u_pair

__all__ = [
    "airy", "airy_all", "bessel_j", "erfc", "hyp2f3", "term_ratio",
    "pcf", "pcf_u_pair",
]
