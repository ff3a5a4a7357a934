"""Involutory MDS matrices over GF(2^m) with few distinct entries.

Finite-field arithmetic (:mod:`invmds.gf2m`), matrix predicates
(:mod:`invmds.matgf`), exhaustive searches and the claim suite
(:mod:`invmds.search`), and a command-line front end (:mod:`invmds.cli`).
"""

__version__ = "0.1.0"

from .gf2m import FieldSpec, make_field, is_irreducible
from .matgf import (MatrixGF, det, mat_mul, is_involutory, is_mds, submatrix,
                    distinct_values, permute, conjugate, transpose)
from .search import (SymbolPattern, SearchTask, ClaimReport, search,
                     enumerate_patterns, canonical_pattern, claim_filters,
                     count_order2_family, verify_order1, verify_paper_claims)
from .matrixfile import parse_matrix_file, render_matrix

__all__ = [
    "FieldSpec", "make_field", "is_irreducible",
    "MatrixGF", "det", "mat_mul", "is_involutory", "is_mds", "submatrix",
    "distinct_values", "permute", "conjugate", "transpose",
    "SymbolPattern", "SearchTask", "ClaimReport", "search",
    "enumerate_patterns", "canonical_pattern", "claim_filters",
    "count_order2_family", "verify_order1", "verify_paper_claims",
    "parse_matrix_file", "render_matrix",
]
