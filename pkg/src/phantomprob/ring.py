"""Phantom numbers: the commutative ring of pairs a + pb with p^2 = p.

A phantom number is stored as its real term ``re`` (a) and phantom term
``ph`` (b).  The reduction ``a + b`` is a ring homomorphism to the reals,
which gives nearly every operation a "realization form": apply the real
function to ``a`` and to ``a + b`` separately and re-assemble.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# Absolute tolerance for zero / zero-divisor detection, library wide.
ZERO_TOL = 1e-12


class PhantomError(Exception):
    """Base class for domain errors on phantom numbers."""


class NotInvertible(PhantomError):
    """Raised when inverting zero or a zero divisor."""


class RootDomain(PhantomError):
    """Raised for an even root of a number with a negative component."""


class LogDomain(PhantomError):
    """Raised for the logarithm of a number that is not pseudo positive."""


class BadAlpha(PhantomError):
    """Raised when the alpha-map parameter is not positive."""


class BadOrder(PhantomError):
    """Raised when an operation needs an order it cannot use."""


class SignClass(enum.Enum):
    ZERO = "zero"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    PSEUDO_POSITIVE = "pseudo_positive"
    PSEUDO_NEGATIVE = "pseudo_negative"
    ZERO_DIVISOR = "zero_divisor"
    INDEFINITE = "indefinite"


class Comparison(enum.Enum):
    LESS = -1
    EQUIVALENT = 0
    GREATER = 1


@dataclass(frozen=True)
class Phantom:
    """An element a + pb of the phantom ring."""

    re: float = 0.0
    ph: float = 0.0

    def __post_init__(self):
        re = float(self.re)
        ph = float(self.ph)
        if not (math.isfinite(re) and math.isfinite(ph)):
            raise ValueError(f"phantom components must be finite: ({self.re}, {self.ph})")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "ph", ph)

    # -- accessors ---------------------------------------------------------

    @property
    def reduction(self) -> float:
        """The real number a + b."""
        return self.re + self.ph

    def conjugate(self) -> "Phantom":
        """(a + b) - pb: the same interval with endpoints swapped."""
        return Phantom(self.re + self.ph, -self.ph)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Phantom":
        if isinstance(other, Phantom):
            return other
        if isinstance(other, (int, float)):
            return Phantom(float(other), 0.0)
        return NotImplemented

    def __add__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Phantom(self.re + other.re, self.ph + other.ph)

    __radd__ = __add__

    def __sub__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Phantom(self.re - other.re, self.ph - other.ph)

    def __rsub__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Phantom(-self.re, -self.ph)

    def __mul__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Phantom(
            self.re * other.re,
            self.re * other.ph + self.ph * other.re + self.ph * other.ph,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Phantom":
        """Multiplicative inverse 1/a + p(1/(a+b) - 1/a)."""
        if classify(self) in (SignClass.ZERO, SignClass.ZERO_DIVISOR):
            raise NotInvertible(f"{self} is zero or a zero divisor")
        inv_re = 1.0 / self.re
        return Phantom(inv_re, 1.0 / self.reduction - inv_re)

    def __truediv__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if classify(other) in (SignClass.ZERO, SignClass.ZERO_DIVISOR):
            raise NotInvertible(f"division by {other}")
        q_re = self.re / other.re
        return Phantom(q_re, self.reduction / other.reduction - q_re)

    def __rtruediv__(self, other):
        other = Phantom._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> "Phantom":
        return pow_int(self, n)

    def __abs__(self) -> float:
        return phantom_abs(self)

    def __repr__(self):
        return f"Phantom({self.re!r}, {self.ph!r})"


ZERO = Phantom(0.0, 0.0)
ONE = Phantom(1.0, 0.0)


def _sentinel(re: float, ph: float) -> Phantom:
    z = object.__new__(Phantom)
    object.__setattr__(z, "re", re)
    object.__setattr__(z, "ph", ph)
    return z


#: Limit sentinels for CDF queries; not valid as stored data.
POS_INF = _sentinel(math.inf, math.inf)
NEG_INF = _sentinel(-math.inf, -math.inf)


def reduction(z: Phantom) -> float:
    return z.reduction


def conjugate(z: Phantom) -> Phantom:
    return z.conjugate()


def classify(z: Phantom, tol: float = ZERO_TOL) -> SignClass:
    """Most specific sign class of z.

    Zero divisors are the elements with a = 0 or a + b = 0 (and not both,
    which is zero itself); both tests use the absolute tolerance ``tol``.
    """
    re_zero = abs(z.re) <= tol
    red_zero = abs(z.reduction) <= tol
    if re_zero and red_zero:
        return SignClass.ZERO
    if re_zero or red_zero:
        return SignClass.ZERO_DIVISOR
    if z.re > 0 and z.ph > 0:
        return SignClass.POSITIVE
    if z.re > 0 and z.reduction > 0:
        return SignClass.PSEUDO_POSITIVE
    if z.re < 0 and z.ph < 0:
        return SignClass.NEGATIVE
    if z.re < 0 and z.reduction < 0:
        return SignClass.PSEUDO_NEGATIVE
    return SignClass.INDEFINITE


def is_invertible(z: Phantom, tol: float = ZERO_TOL) -> bool:
    return classify(z, tol) not in (SignClass.ZERO, SignClass.ZERO_DIVISOR)


def is_pseudo_positive(z: Phantom) -> bool:
    return z.re > 0 and z.reduction > 0


def is_pseudo_nonnegative(z: Phantom, tol: float = ZERO_TOL) -> bool:
    return is_pseudo_positive(z) or classify(z, tol) is SignClass.ZERO


def pow_int(z: Phantom, n: int) -> Phantom:
    """z^n = a^n + p((a+b)^n - a^n); negative n requires invertibility."""
    if n == 0:
        return ONE
    if n < 0 and not is_invertible(z):
        raise NotInvertible(f"negative power of {z}")
    re_n = z.re ** n
    return Phantom(re_n, z.reduction ** n - re_n)


def _real_nth_root(x: float, n: int) -> float:
    if n % 2 == 0 or x >= 0:
        return x ** (1.0 / n)
    return -((-x) ** (1.0 / n))


def nth_root(z: Phantom, n: int) -> Phantom:
    """Principal n'th root; only the nonnegative branch of even roots.

    Odd roots of negative components use the real odd-root convention.
    """
    if n < 1:
        raise ValueError("root index must be a positive integer")
    if n % 2 == 0 and (z.re < 0 or z.reduction < 0):
        raise RootDomain(f"even root of {z} with a negative component")
    root_re = _real_nth_root(z.re, n)
    return Phantom(root_re, _real_nth_root(z.reduction, n) - root_re)


def sqrt(z: Phantom) -> Phantom:
    return nth_root(z, 2)


def exp(z: Phantom) -> Phantom:
    """e^z = e^a + p(e^{a+b} - e^a)."""
    e_re = math.exp(z.re)
    return Phantom(e_re, math.exp(z.reduction) - e_re)


def log(z: Phantom) -> Phantom:
    """log a + p(log(a+b) - log a); defined for pseudo positive z."""
    if not is_pseudo_positive(z):
        raise LogDomain(f"log of non-pseudo-positive {z}")
    l_re = math.log(z.re)
    return Phantom(l_re, math.log(z.reduction) - l_re)


def phantom_abs(z: Phantom) -> float:
    """Modulus sqrt((a + b/2)^2 + (b/2)^2) = sqrt((a^2 + (a+b)^2)/2)."""
    return math.hypot(z.re + 0.5 * z.ph, 0.5 * z.ph)


def alpha_value(z: Phantom, alpha: float) -> float:
    """The real image a + b/alpha; requires alpha > 0."""
    if not alpha > 0:
        raise BadAlpha(f"alpha must be positive, got {alpha}")
    return z.re + z.ph / alpha


def distance(z1: Phantom, z2: Phantom) -> float:
    """Metric induced by the modulus; d(z, conj(z)) = |ph(z)|."""
    return phantom_abs(z1 - z2)


def norm(zs) -> float:
    """Euclidean norm on tuples of phantom numbers."""
    return math.sqrt(sum(phantom_abs(z) ** 2 for z in zs))


# -- orders ----------------------------------------------------------------


@dataclass(frozen=True)
class OrderKind:
    """A comparison rule on the phantom ring.

    ``lex`` is the only total order; ``alpha``, ``real`` and ``abs`` are weak
    orders with genuine equivalence classes.  ``abs`` ignores signs, so it is
    not suitable for probability sublevel sets.
    """

    tag: str
    alpha: float | None = None

    def __post_init__(self):
        if self.tag not in ("lex", "alpha", "real", "abs"):
            raise ValueError(f"unknown order tag {self.tag!r}")
        if self.tag == "alpha":
            if self.alpha is None or not self.alpha > 0:
                raise BadAlpha(f"alpha order needs alpha > 0, got {self.alpha}")

    @property
    def probability_grade(self) -> bool:
        """Whether the order may drive CDFs (0 < z < 1 on probabilities)."""
        return self.tag in ("lex", "alpha")


LEX = OrderKind("lex")
REAL_TERM = OrderKind("real")
ABS_NORM = OrderKind("abs")


def alpha_order(alpha: float) -> OrderKind:
    return OrderKind("alpha", alpha)


def compare(z1: Phantom, z2: Phantom, order: OrderKind = LEX) -> Comparison:
    if order.tag == "lex":
        if z1.re != z2.re:
            return Comparison.LESS if z1.re < z2.re else Comparison.GREATER
        if z1.ph != z2.ph:
            return Comparison.LESS if z1.ph < z2.ph else Comparison.GREATER
        return Comparison.EQUIVALENT
    if order.tag == "alpha":
        k1 = z1.re + z1.ph / order.alpha
        k2 = z2.re + z2.ph / order.alpha
    elif order.tag == "real":
        k1, k2 = z1.re, z2.re
    else:  # abs
        k1, k2 = phantom_abs(z1), phantom_abs(z2)
    if k1 < k2:
        return Comparison.LESS
    if k1 > k2:
        return Comparison.GREATER
    return Comparison.EQUIVALENT


def leq(z1: Phantom, z2: Phantom, order: OrderKind = LEX) -> bool:
    return compare(z1, z2, order) is not Comparison.GREATER


def geq(z1: Phantom, z2: Phantom, order: OrderKind = LEX) -> bool:
    return compare(z1, z2, order) is not Comparison.LESS
