"""Schubert polynomials, the nabla operator, and Stanley's determinant formula."""

from .linalg import IntMatrix, determinant, mat_mul
from .permutations import Permutation, level_counts, parse_permutation
from .polynomials import Poly, divided_difference, nabla
from .schubert import SchubertTable, build_schubert_table, weight_basis
from .stanley import m_matrix, m_tilde, stanley_rhs, verify_stanley

__version__ = "0.1.0"
