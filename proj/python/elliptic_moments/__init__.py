"""Exact and asymptotic mixed moments of Gaussian elliptic matrices.

Polynomials in rho are returned as ``{exponent: coefficient}`` dicts with
Python ints as coefficients.
"""

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, __version__  # noqa: F401
