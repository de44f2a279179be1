"""Structure-group invariants of finite involutive Yang-Baxter solutions."""

from ._core import (
    Error,
    GuardExceeded,
    InvariantViolation,
    ParseError,
    Solution,
    ValidationError,
    brace_check,
    check_counts,
    check_pi_injectivity,
    check_span_stabilization,
    dimension,
    element,
    germ,
    profile,
    run_cli,
    spanning_matrices,
)

__all__ = [
    "Error",
    "GuardExceeded",
    "InvariantViolation",
    "ParseError",
    "Solution",
    "ValidationError",
    "brace_check",
    "check_counts",
    "check_pi_injectivity",
    "check_span_stabilization",
    "dimension",
    "element",
    "germ",
    "profile",
    "run_cli",
    "spanning_matrices",
]
