"""Perfect sequences and arrays over the unit quaternions."""

from ._core import (
    BudgetExceeded,
    aop_check,
    autocorr,
    catalog_dir,
    construct,
    exhaustive_search,
    flatten,
    is_perfect,
    parse_array,
    parse_sequence,
    serialize_array,
    serialize_sequence,
    spectrum,
    template_search,
    template_sequence,
    verify_catalog,
)

__all__ = [
    "BudgetExceeded",
    "aop_check",
    "autocorr",
    "catalog_dir",
    "construct",
    "exhaustive_search",
    "flatten",
    "is_perfect",
    "parse_array",
    "parse_sequence",
    "serialize_array",
    "serialize_sequence",
    "spectrum",
    "template_search",
    "template_sequence",
    "verify_catalog",
]
