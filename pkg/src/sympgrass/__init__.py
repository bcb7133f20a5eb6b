"""Exact Hilbert functions and multiplicities of tangent cones of Schubert
varieties in the symplectic Grassmannian, cross-verified by independent
counts: dominated monomials, standard tableaux, symmetric nonintersecting
lattice paths, and initial-ideal avoidance."""

from .grid import GridMonomial, VGrid, dominates_monomial, dominator, s_chain
from .hilbert import (
    dominated_complex,
    hilbert_value,
    hilbert_vector,
    multiplicity,
    tangent_cone_dimension,
)
from .monw import monw, monw_points
from .paths import count_path_systems, enumerate_path_systems
from .poset import IndexSet, enumerate_index_sets, enumerate_isotropic, parse_index_set
from .smt import AdmissiblePair, count_standard_monomials, enumerate_admissible_pairs

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePair",
    "GridMonomial",
    "IndexSet",
    "VGrid",
    "count_path_systems",
    "count_standard_monomials",
    "dominated_complex",
    "dominates_monomial",
    "dominator",
    "enumerate_admissible_pairs",
    "enumerate_index_sets",
    "enumerate_isotropic",
    "enumerate_path_systems",
    "hilbert_value",
    "hilbert_vector",
    "monw",
    "monw_points",
    "multiplicity",
    "parse_index_set",
    "s_chain",
    "tangent_cone_dimension",
    "__version__",
]
