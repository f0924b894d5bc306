"""Exact-arithmetic workbench for projective few-weight trace codes over F_q."""

__version__ = "0.1.0"

from .analysis import (GriesmerClassification, SrgParams, ab_minimality,
                       build_srg_graph, classify_griesmer, exact_minimality,
                       griesmer_sum, projectivity_check, srg_params_from_code,
                       srg_verify)
from .charsum import (CyclotomicInteger, GaussSumValue, gauss_product_over_q,
                      gauss_rational, gauss_sum_bruteforce, gauss_sum_formula,
                      set_char_sum)
from .codes import (CodeSpec, WeightDistribution, build_code, codeword,
                    generator_matrix, matrix_rank, weight_distribution_enumerated,
                    weight_distribution_formula, weight_of)
from .defsets import FAMILIES, DefiningSet, build_D, build_S, check_fq_invariance
from .gf import FieldCtx, TowerCtx, build_field, build_tower, quadratic_character

__all__ = [
    "__version__",
    "FieldCtx", "TowerCtx", "build_field", "build_tower", "quadratic_character",
    "CyclotomicInteger", "GaussSumValue", "gauss_sum_bruteforce",
    "gauss_sum_formula", "gauss_rational", "gauss_product_over_q", "set_char_sum",
    "DefiningSet", "FAMILIES", "build_S", "build_D", "check_fq_invariance",
    "CodeSpec", "WeightDistribution", "build_code", "codeword", "weight_of",
    "weight_distribution_enumerated", "weight_distribution_formula",
    "generator_matrix", "matrix_rank",
    "GriesmerClassification", "SrgParams", "griesmer_sum", "classify_griesmer",
    "projectivity_check", "ab_minimality", "exact_minimality",
    "srg_params_from_code", "build_srg_graph", "srg_verify",
]
