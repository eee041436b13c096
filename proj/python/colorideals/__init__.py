"""Hereditary classes of edge-colored complete graphs."""

from ._core import (
    AuditFailure,
    BudgetExceeded,
    Coloring,
    ParseError,
    adapters,
    alpha,
    binomial_fit,
    classify,
    contains,
    count,
    encode,
    fib_strings,
    fibonacci,
    fingerprint,
    generalized_fibonacci,
    interval_decomposition,
    is_r_rich,
    is_r_simple,
    is_r_wealthy,
    ramsey_upper_bound,
    recheck_report,
    selftest,
    simplicity_level,
    tameness_level,
)

__version__ = "0.1.0"
