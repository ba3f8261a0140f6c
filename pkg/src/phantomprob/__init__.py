"""Arithmetic and probability calculus over phantom numbers a + pb, p^2 = p."""

from .ring import (
    ABS_NORM,
    BadAlpha,
    BadOrder,
    Comparison,
    LEX,
    LogDomain,
    NEG_INF,
    NotInvertible,
    ONE,
    OrderKind,
    POS_INF,
    Phantom,
    PhantomError,
    REAL_TERM,
    RootDomain,
    SignClass,
    ZERO,
    alpha_order,
    alpha_value,
    classify,
    compare,
    conjugate,
    distance,
    exp,
    geq,
    is_invertible,
    is_pseudo_positive,
    leq,
    log,
    nth_root,
    phantom_abs,
    pow_int,
    reduction,
    sqrt,
)

__version__ = "0.1.0"

__all__ = [
    "ABS_NORM",
    "BadAlpha",
    "BadOrder",
    "Comparison",
    "LEX",
    "LogDomain",
    "NEG_INF",
    "NotInvertible",
    "ONE",
    "OrderKind",
    "POS_INF",
    "Phantom",
    "PhantomError",
    "REAL_TERM",
    "RootDomain",
    "SignClass",
    "ZERO",
    "alpha_order",
    "alpha_value",
    "classify",
    "compare",
    "conjugate",
    "distance",
    "exp",
    "geq",
    "is_invertible",
    "is_pseudo_positive",
    "leq",
    "log",
    "nth_root",
    "phantom_abs",
    "pow_int",
    "reduction",
    "sqrt",
    "__version__",
]
