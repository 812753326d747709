"""Evanescent-wave numerics.

Complex-phase WKB decomposition, waveguide dispersion with cutoff,
total-reflection and frustrated-total-reflection scattering, and a
brute-force ODE oracle for cross-validation.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
