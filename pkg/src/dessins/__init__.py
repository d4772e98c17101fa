"""
Exact computations around dessins d'enfants: constellations, medial quivers
and surface algebras, surface orders, truncated Laurent series, the affine
symmetric group, lattices over ``Q[[x]]`` and Lusztig's embedding, and the
combinatorics of the Gel'fand-Ponomarev algebra.
"""

__version__ = "0.1.0"

from .permgroup import Constellation, Permutation, surface_data, validate_constellation  # noqa: F401
from .quiver import check_surface_axioms, medial_quiver  # noqa: F401
from .laurent import Laurent, LaurentMatrix, PrecisionError  # noqa: F401
