"""Exact major-index distributions over standard Young tableaux with a
fixed number of descents: enumeration oracles, closed formulas,
principally specialized Schur polynomials, Kostka polynomials, and
verification campaigns tying them all together.
"""

from ._kernels import BACKEND
from .qpoly import (
    ONE,
    QPoly,
    ZERO,
    InexactDivisionError,
    ShapeStats,
    exact_div,
    gauss_binomial,
    monomial,
    one_minus_q,
    q_pochhammer,
    reciprocal_shift,
    shape_stats,
)
from .shapes import Partition, ShapeError, SkewShape, partitions_of, subpartitions
from .tableaux import (
    DescentDistribution,
    OracleLimitError,
    StandardTableau,
    distribution,
    enumerate_syt,
    ssyt_principal_spec,
    statistics,
)
from .permutations import (
    Permutation,
    a_polynomials,
    avoiders_321,
    avoids_321,
    perm_statistics,
    rsk,
)
from .closed_forms import (
    ClauseMismatchError,
    DomainError,
    FormulaResult,
    conjecture_formula,
    evaluate_formula,
    f_hook_nk1,
    f_max_descents,
    f_n33,
    f_nk2,
    f_three_row_full,
    f_two_row,
    f_two_row_skew,
    stanley_distribution,
    two_row_total,
)
from .schur import jt_e_specialization, jt_h_specialization, match_up_to_shift
from .kr_koh import admissible_sequences, koh_expansion, kr_kostka
from .verify import Finding, Report, cocentricity, run_suite, sagan

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ONE",
    "QPoly",
    "ZERO",
    "InexactDivisionError",
    "ShapeStats",
    "exact_div",
    "gauss_binomial",
    "monomial",
    "one_minus_q",
    "q_pochhammer",
    "reciprocal_shift",
    "shape_stats",
    "Partition",
    "ShapeError",
    "SkewShape",
    "partitions_of",
    "subpartitions",
    "DescentDistribution",
    "OracleLimitError",
    "StandardTableau",
    "distribution",
    "enumerate_syt",
    "ssyt_principal_spec",
    "statistics",
    "Permutation",
    "a_polynomials",
    "avoiders_321",
    "avoids_321",
    "perm_statistics",
    "rsk",
    "ClauseMismatchError",
    "DomainError",
    "FormulaResult",
    "conjecture_formula",
    "evaluate_formula",
    "f_hook_nk1",
    "f_max_descents",
    "f_n33",
    "f_nk2",
    "f_three_row_full",
    "f_two_row",
    "f_two_row_skew",
    "stanley_distribution",
    "two_row_total",
    "jt_e_specialization",
    "jt_h_specialization",
    "match_up_to_shift",
    "admissible_sequences",
    "koh_expansion",
    "kr_kostka",
    "Finding",
    "Report",
    "cocentricity",
    "run_suite",
    "sagan",
    "__version__",
]
