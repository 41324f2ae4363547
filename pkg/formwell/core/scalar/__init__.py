from formwell.core.scalar.gaussian import (
    HALF,
    ONE,
    ZERO,
    ArithOp,
    GaussianRational,
    I,
    ScalarLike,
    format_rational,
    gr_arith,
    gr_conj,
)

__all__ = [
    "ArithOp",
    "GaussianRational",
    "ScalarLike",
    "format_rational",
    "gr_arith",
    "gr_conj",
    "ZERO",
    "ONE",
    "I",
    "HALF",
]
