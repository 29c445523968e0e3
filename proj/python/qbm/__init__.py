"""Damped quantum harmonic oscillator in a Drude bath.

Equilibrium statistics, thermodynamic vs von Neumann entropy, heat
bookkeeping, Landauer diagnostics, and the exact finite-bath oracle.
Natural units hbar = k_B = 1 throughout; omega0 sets the frequency scale.
"""

from qbm._core import *  # noqa: F401,F403
from qbm._core import __doc__ as _core_doc  # noqa: F401
