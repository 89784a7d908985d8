"""Third Hankel determinant and Zalcman functional bounds for classes of order alpha.

Coefficient maps take Caratheodory coefficients ``p_1..p_4`` to the Taylor
coefficients of starlike, convex, bounded-turning and harmonic maps.  Bounds
are exact rationals, identities are checked in exact polynomial arithmetic,
and a multistart search over atomic Herglotz measures probes sharpness.
"""

from .bounds import (
    H31, H31_G, H31_H, J2, J3,
    BoundResult, Functional, alternative_g_bound, bound_for, bound_h31,
    bound_zalcman, chi, chi_max, reference_bounds,
)
from .caratheodory import (
    CaratheodoryCoeffs, HerglotzMeasure, DiskWitness, coeffs_from_measure,
    is_feasible, disk_reconstruct, disk_witness, lemma_residuals,
    lemma_suite, sample_measure, toeplitz_matrix,
)
from .coeffs import (
    ClassSpec, CoeffVector, HarmonicCoeffVector, Kind, bounded_turning_coeffs,
    class_coeffs, convex_coeffs, harmonic_m_coeffs, starlike_coeffs,
)
from .errors import (
    AlphaOutOfRange, HankelBoundsError, IndexOutOfRange, InfeasibleInput,
    InsufficientCoefficients, SymbolMismatch, UnsupportedFunctional,
)
from .functionals import FunctionalValue, fekete_szego, h31_expansion, hankel, zalcman
from .polyid import Poly, verify_all, verify_identity
from .search import SearchConfig, SearchReport, alpha_sweep, maximize

__version__ = "0.1.0"
