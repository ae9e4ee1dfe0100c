"""Exact distributions of standard Young tableau entries.

Exposes partitions and hook counts, standard tableaux, Robinson-Schensted
insertion, involution statistics with the exact f(n,k) formula, limiting
entry probabilities as rationals, and quasirandomness diagnostics for
permutation families.  Heavy enumeration loops run on a compiled kernel
when the extension is built, with a pure Python fallback.
"""

from ._kernels import BACKEND
from .errors import AntichainViolation, CapExceeded

__version__ = "0.1.0"

__all__ = ["AntichainViolation", "BACKEND", "CapExceeded", "__version__"]
