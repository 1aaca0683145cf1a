"""Finite-field reciprocal sums, Kloosterman sums and proof checks."""

from ._core import (
    FfrError,
    Field,
    admissible_k,
    auto_irreducible,
    count_j2s,
    count_nk,
    count_nk_oracle,
    count_tr,
    divisor_count,
    factor,
    interval_elements,
    is_irreducible,
    kloosterman,
    lemma21_check,
    multilinear_sum,
    resultant,
    run,
)

__all__ = [
    "FfrError",
    "Field",
    "admissible_k",
    "auto_irreducible",
    "count_j2s",
    "count_nk",
    "count_nk_oracle",
    "count_tr",
    "divisor_count",
    "factor",
    "interval_elements",
    "is_irreducible",
    "kloosterman",
    "lemma21_check",
    "multilinear_sum",
    "resultant",
    "run",
]
