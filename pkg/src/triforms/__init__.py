"""Exact representation counts for positive definite ternary quadratic
forms and ternary sums of triangular numbers, plus machinery to verify the
identities relating them.

The hot counting kernels have a compiled (Cython) implementation with a
NumPy fallback chosen at import; see ``triforms.kernels``.
"""

from .counting import (count, count_parity, count_table, count_tilde,
                       solutions)
from .forms import (BinaryQuadForm, HypothesisError, InvalidFormError,
                    LinearCongruence, MapDomainError, ParityClass,
                    RangeError, TernaryQuadForm)
from .fixtures import ConstrainedRepSet, ExplicitLinearMap, GenusFixture
from .identities import (fraction_hypothesis, lemma31_check, lemma32_check,
                         lemma32_counterexample_search, siegel_identity_check,
                         table_triples, theorem1_check, theorem2_check,
                         theorem3_check, theorem4_check, verify_bijection)
from .kernels import backend_name
from .localdensity import (alpha2_116, alpha2_of, is_excluded_116,
                           representability_check_116, siegel_ratio_check,
                           two_adic_split)
from .reductions import ReductionFormula, reduce_triple, verify_reduction
from .report import VerificationRecord, VerificationReport
from .scans import run_scan
from .triangular import (TriangularTriple, t_direct, t_table, t_via_forms,
                         triangular_number)

__version__ = "0.1.0"

__all__ = [
    "BinaryQuadForm", "ConstrainedRepSet", "ExplicitLinearMap",
    "GenusFixture", "HypothesisError", "InvalidFormError",
    "LinearCongruence", "MapDomainError", "ParityClass", "RangeError",
    "ReductionFormula", "TernaryQuadForm", "TriangularTriple",
    "VerificationRecord", "VerificationReport", "alpha2_116", "alpha2_of",
    "backend_name", "count", "count_parity", "count_table", "count_tilde",
    "fraction_hypothesis", "is_excluded_116", "lemma31_check",
    "lemma32_check", "lemma32_counterexample_search", "reduce_triple",
    "representability_check_116", "run_scan", "siegel_identity_check",
    "siegel_ratio_check", "solutions", "t_direct", "t_table", "t_via_forms",
    "table_triples", "theorem1_check", "theorem2_check", "theorem3_check",
    "theorem4_check", "triangular_number", "two_adic_split",
    "verify_bijection", "verify_reduction",
]
