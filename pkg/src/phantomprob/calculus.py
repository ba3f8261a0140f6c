"""Polynomials, paths, and numerical path integration over phantom numbers.

A path gamma(t) = (a(t), b(t)) traces a curve in the phantom plane.  The
integral of a phantom-valued function f = f_re + p*f_ph along gamma splits
into two real line integrals:

    re part:  integral of f_re(t) * a'(t) dt
    ph part:  integral of f_re(t) * b'(t) + f_ph(t) * (a'(t) + b'(t)) dt

where f_re(t), f_ph(t) abbreviate the components of f(gamma(t)).  Both are
computed with adaptive composite 15-point Gauss-Legendre quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .ring import Phantom, PhantomError, ZERO, conjugate

__all__ = [
    "PhantomPolynomial",
    "Path",
    "QuadratureConfig",
    "OutOfDomain",
    "QuadratureFailure",
    "poly_eval",
    "poly_conjugate",
    "poly_derivative",
    "path_point",
    "path_tangent",
    "path_integral",
    "line_path",
]


class OutOfDomain(PhantomError):
    """Raised when a path is queried outside its parameter interval."""


class QuadratureFailure(PhantomError):
    """Raised when adaptive quadrature cannot meet its tolerances."""


# -- polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class PhantomPolynomial:
    """A polynomial with phantom coefficients, degree-ascending."""

    coefficients: tuple[Phantom, ...] = ()

    def __post_init__(self):
        coeffs = tuple(
            c if isinstance(c, Phantom) else Phantom(float(c), 0.0)
            for c in self.coefficients
        )
        # Strip trailing zeros so the zero polynomial is the empty tuple.
        n = len(coeffs)
        while n > 0 and coeffs[n - 1].re == 0.0 and coeffs[n - 1].ph == 0.0:
            n -= 1
        object.__setattr__(self, "coefficients", coeffs[:n])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: Phantom) -> Phantom:
        return poly_eval(self, z)


def _real_horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_eval(f: PhantomPolynomial, z: Phantom) -> Phantom:
    """Evaluate by components: f_re at re(z), reduced poly at red(z)."""
    re_coeffs = [c.re for c in f.coefficients]
    red_coeffs = [c.reduction for c in f.coefficients]
    v_re = _real_horner(re_coeffs, z.re)
    v_red = _real_horner(red_coeffs, z.reduction)
    return Phantom(v_re, v_red - v_re)


def poly_conjugate(f: PhantomPolynomial) -> PhantomPolynomial:
    """Conjugate every coefficient."""
    return PhantomPolynomial(tuple(conjugate(c) for c in f.coefficients))


def poly_derivative(f: PhantomPolynomial) -> PhantomPolynomial:
    """Formal derivative; k * c_k as phantom scalar multiples."""
    return PhantomPolynomial(
        tuple(c * k for k, c in enumerate(f.coefficients) if k >= 1)
    )


# -- paths --------------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """A curve (a(t), b(t)) in the phantom plane, t in [t0, t1].

    Coordinate functions must be piecewise differentiable, and the curve is
    assumed not to self-intersect; the implementation does not check.  When
    derivative functions are omitted the tangent falls back to central
    differences.  ``param_of`` optionally inverts the parameterization
    (phantom point -> t) for callers that need tangents at values.
    """

    a: Callable[[float], float]
    b: Callable[[float], float]
    t0: float = 0.0
    t1: float = 1.0
    a_deriv: Callable[[float], float] | None = None
    b_deriv: Callable[[float], float] | None = None
    param_of: Callable[[Phantom], float] | None = None

    def point(self, t: float) -> Phantom:
        return path_point(self, t)

    def tangent(self, t: float) -> Phantom:
        return path_tangent(self, t)

    def reversed(self) -> "Path":
        t0, t1 = self.t0, self.t1
        a, b = self.a, self.b
        da, db = self.a_deriv, self.b_deriv
        return Path(
            a=lambda t: a(t0 + t1 - t),
            b=lambda t: b(t0 + t1 - t),
            t0=t0,
            t1=t1,
            a_deriv=(None if da is None else (lambda t: -da(t0 + t1 - t))),
            b_deriv=(None if db is None else (lambda t: -db(t0 + t1 - t))),
        )


def line_path(z0: Phantom, z1: Phantom) -> Path:
    """The straight segment from z0 to z1 over t in [0, 1]."""
    dre = z1.re - z0.re
    dph = z1.ph - z0.ph
    return Path(
        a=lambda t: z0.re + t * dre,
        b=lambda t: z0.ph + t * dph,
        t0=0.0,
        t1=1.0,
        a_deriv=lambda t: dre,
        b_deriv=lambda t: dph,
    )


def _check_domain(gamma: Path, t: float) -> None:
    lo, hi = min(gamma.t0, gamma.t1), max(gamma.t0, gamma.t1)
    eps = 1e-12 * max(1.0, abs(lo), abs(hi))
    if t < lo - eps or t > hi + eps:
        raise OutOfDomain(f"t={t} outside [{lo}, {hi}]")


def path_point(gamma: Path, t: float) -> Phantom:
    _check_domain(gamma, t)
    return Phantom(gamma.a(t), gamma.b(t))


def path_tangent(gamma: Path, t: float) -> Phantom:
    """(a'(t), b'(t)); central differences when derivatives are absent."""
    _check_domain(gamma, t)
    h = 1e-6 * max(1.0, abs(t))
    if gamma.a_deriv is not None:
        da = gamma.a_deriv(t)
    else:
        da = (gamma.a(t + h) - gamma.a(t - h)) / (2 * h)
    if gamma.b_deriv is not None:
        db = gamma.b_deriv(t)
    else:
        db = (gamma.b(t + h) - gamma.b(t - h)) / (2 * h)
    return Phantom(da, db)


# -- quadrature ---------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_subdivisions: int = 2 ** 16
    infinite_truncation: float = 1e6

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()

# Gauss-Legendre nodes for the error-estimating panel pair.
_GL15_X, _GL15_W = np.polynomial.legendre.leggauss(15)
_GL7_X, _GL7_W = np.polynomial.legendre.leggauss(7)


def _panel(g: Callable[[float], float], lo: float, hi: float) -> tuple[float, float]:
    """15-point value and a 7-point-based error estimate on [lo, hi]."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    v15 = half * sum(w * g(mid + half * x) for x, w in zip(_GL15_X, _GL15_W))
    v7 = half * sum(w * g(mid + half * x) for x, w in zip(_GL7_X, _GL7_W))
    return v15, abs(v15 - v7)


def _adaptive(g: Callable[[float], float], lo: float, hi: float,
              cfg: QuadratureConfig) -> float:
    """Adaptive composite Gauss-Legendre with bisection on failing panels."""
    total, err = _panel(g, lo, hi)
    stack = [(lo, hi, total, err)]
    result = 0.0
    panels = 1
    while stack:
        a, b, v, e = stack.pop()
        if e <= max(cfg.abs_tol, cfg.rel_tol * abs(v)) or (b - a) < 1e-14 * max(
            1.0, abs(a), abs(b)
        ):
            result += v
            continue
        if panels >= cfg.max_subdivisions:
            raise QuadratureFailure(
                f"tolerance unmet after {panels} subdivisions on [{lo}, {hi}]"
            )
        m = 0.5 * (a + b)
        stack.append((a, m, *_panel(g, a, m)))
        stack.append((m, b, *_panel(g, m, b)))
        panels += 1
    return result


def path_integral(
    f: Callable[[Phantom], Phantom],
    gamma: Path,
    sub: tuple[float, float] | None = None,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> Phantom:
    """Integrate f along gamma over the parameter subinterval ``sub``.

    Each real component integral is adapted to tolerance independently.
    Infinite endpoints are clipped at ``cfg.infinite_truncation``.
    """
    lo, hi = sub if sub is not None else (gamma.t0, gamma.t1)
    if math.isinf(lo):
        lo = math.copysign(cfg.infinite_truncation, lo)
    if math.isinf(hi):
        hi = math.copysign(cfg.infinite_truncation, hi)
    if lo == hi:
        return ZERO

    def g_re(t: float) -> float:
        fz = f(path_point(gamma, t))
        return fz.re * path_tangent(gamma, t).re

    def g_ph(t: float) -> float:
        fz = f(path_point(gamma, t))
        tan = path_tangent(gamma, t)
        return fz.re * tan.ph + fz.ph * (tan.re + tan.ph)

    return Phantom(_adaptive(g_re, lo, hi, cfg), _adaptive(g_ph, lo, hi, cfg))
