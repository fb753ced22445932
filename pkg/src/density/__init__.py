"""Exact and bounded-error evaluation of the density formulas."""

from .approx import ApproxReal, DensityResult, ExactRational, format_fraction
from .lagarias import (
    NoPredictionError,
    delta_inert_closed,
    delta_split_closed,
    delta_split_coefficient,
    delta_total,
    euler_constant,
    inert_components,
    lucas_total,
    predictions_for,
)
from .products import artin_product, euler_S, two_variable_product
from .series import (
    DensityError,
    UnsupportedBase,
    artin_additive,
    lemma41_degree,
    s_mn,
    s_mn_partial,
    split_inner_coefficient,
    truncated_split_sum,
    two_variable_sum_generic,
    violation_density,
    violation_k_sum,
    violation_level_density,
)

__all__ = [
    "ApproxReal",
    "DensityResult",
    "ExactRational",
    "format_fraction",
    "NoPredictionError",
    "delta_inert_closed",
    "delta_split_closed",
    "delta_split_coefficient",
    "delta_total",
    "euler_constant",
    "inert_components",
    "lucas_total",
    "predictions_for",
    "artin_product",
    "euler_S",
    "two_variable_product",
    "DensityError",
    "UnsupportedBase",
    "artin_additive",
    "lemma41_degree",
    "s_mn",
    "s_mn_partial",
    "split_inner_coefficient",
    "truncated_split_sum",
    "two_variable_sum_generic",
    "violation_density",
    "violation_k_sum",
    "violation_level_density",
]
