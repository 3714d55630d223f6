"""Exact counting of relation classes by fixed and reflexive points.

Counts are Python ints and probabilities are fractions.Fraction, both exact.
Relation classes are named by strings; see relation_classes().
"""

from ._relcount import (
    binomial,
    check_lemma_mw1,
    convergence_table,
    count_total,
    count_with_at_least_one,
    count_with_k,
    count_with_kl,
    count_without,
    emit_table,
    factorial,
    fit_kmax_line,
    h_peak,
    involution_ratio,
    kernel_probability,
    kmax,
    lambert_w0,
    limit_constant,
    oracle_profile,
    probability_at_least_one,
    profile,
    relation_classes,
    run_verify,
    s_rounded_micro,
    s_series,
    scan_s,
    subfactorial,
    subfactorial_floor,
)

__all__ = [
    "binomial",
    "check_lemma_mw1",
    "convergence_table",
    "count_total",
    "count_with_at_least_one",
    "count_with_k",
    "count_with_kl",
    "count_without",
    "emit_table",
    "factorial",
    "fit_kmax_line",
    "h_peak",
    "involution_ratio",
    "kernel_probability",
    "kmax",
    "lambert_w0",
    "limit_constant",
    "oracle_profile",
    "probability_at_least_one",
    "profile",
    "relation_classes",
    "run_verify",
    "s_rounded_micro",
    "s_series",
    "scan_s",
    "subfactorial",
    "subfactorial_floor",
]

__version__ = "1.0.0"
