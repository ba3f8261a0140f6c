"""Phantom random variables: discrete and continuous, with their statistics.

Every statistic is computed in "realization form": the real side uses real
terms of values and probabilities, the reduced side uses reductions of
both, and the phantom term is the difference.  Because reduction is a ring
homomorphism this agrees with direct phantom-ring summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .calculus import (
    DEFAULT_QUADRATURE,
    Path,
    QuadratureConfig,
    path_integral,
    path_point,
)
from .measure import MEASURE_TOL, in_zone
from .ring import (
    Comparison,
    LEX,
    OrderKind,
    Phantom,
    PhantomError,
    BadOrder,
    NEG_INF,
    ONE,
    POS_INF,
    SignClass,
    ZERO,
    classify,
    compare,
    is_invertible,
    leq,
    nth_root,
)

__all__ = [
    "DiscretePRV",
    "ContinuousPRV",
    "JointDiscretePRV",
    "DegenerateVariance",
    "EmptyRange",
    "pmf",
    "cdf_discrete",
    "cdf_continuous",
    "moment",
    "mean",
    "variance",
    "std_dev",
    "expect_fn",
    "marginals",
    "joint_independent",
    "covariance",
    "correlation",
    "mgf",
    "mgf_linear",
    "mgf_sum",
    "xi_sup",
    "xi_inf",
]

#: Componentwise tolerance for equality of computed statistics.
STAT_EQ_TOL = 1e-10


class DegenerateVariance(PhantomError):
    pass


class EmptyRange(PhantomError):
    pass


# -- random variables ---------------------------------------------------------


@dataclass(frozen=True)
class DiscretePRV:
    """Finite-support random variable: pairs of (value, probability)."""

    support: tuple[tuple[Phantom, Phantom], ...]
    residual: Phantom = ZERO  # truncated tail mass, reported not folded in
    origin: object = None  # the spec this PRV was built from, if any

    def __post_init__(self):
        support = tuple((v, p) for v, p in self.support)
        seen = set()
        total = ZERO
        for v, p in support:
            key = (v.re, v.ph)
            if key in seen:
                raise ValueError(f"duplicate support value {v}")
            seen.add(key)
            if not in_zone(p):
                raise ValueError(f"probability {p} outside the admissible zone")
            total = total + p
        total = total + self.residual
        if abs(total.re - 1.0) > MEASURE_TOL or abs(total.ph) > MEASURE_TOL:
            raise ValueError(f"probabilities sum to {total}, expected (1, 0)")
        object.__setattr__(self, "support", support)

    def values(self) -> tuple[Phantom, ...]:
        return tuple(v for v, _ in self.support)


@dataclass(frozen=True)
class ContinuousPRV:
    """Path-supported random variable with a phantom density.

    The density must have a nonnegative real component along the path and
    integrate (against the path tangent) to one over the full domain.
    """

    path: Path
    density: Callable[[Phantom], Phantom]
    cfg: QuadratureConfig = DEFAULT_QUADRATURE
    origin: object = None

    def weighted(self, g: Callable[[Phantom], Phantom]) -> Callable[[Phantom], Phantom]:
        density = self.density
        return lambda z: g(z) * density(z)


@dataclass(frozen=True)
class JointDiscretePRV:
    """Finite joint distribution over pairs of phantom values."""

    support: tuple[tuple[tuple[Phantom, Phantom], Phantom], ...]

    def __post_init__(self):
        support = tuple(((x, y), p) for (x, y), p in self.support)
        total = ZERO
        for (_, _), p in support:
            if not in_zone(p):
                raise ValueError(f"probability {p} outside the admissible zone")
            total = total + p
        if abs(total.re - 1.0) > MEASURE_TOL or abs(total.ph) > MEASURE_TOL:
            raise ValueError(f"probabilities sum to {total}, expected (1, 0)")
        object.__setattr__(self, "support", support)


# -- pmf / cdf ------------------------------------------------------------------


def pmf(x: DiscretePRV, z: Phantom) -> Phantom:
    """The stored probability at z (exact component match), else zero."""
    for v, p in x.support:
        if v.re == z.re and v.ph == z.ph:
            return p
    return ZERO


def _require_probability_grade(order: OrderKind) -> None:
    if not order.probability_grade:
        raise BadOrder(
            f"{order.tag!r} order is not probability-grade; use lex or alpha"
        )


def cdf_discrete(x: DiscretePRV, z: Phantom, order: OrderKind = LEX) -> Phantom:
    """Sum of probabilities over support values at or below z in the order."""
    _require_probability_grade(order)
    if z is POS_INF:
        return sum((p for _, p in x.support), ZERO)
    if z is NEG_INF:
        return ZERO
    acc = ZERO
    for v, p in x.support:
        if leq(v, z, order):
            acc = acc + p
    return acc


# Grid resolution for locating order-sublevel sets on a path.
_SUBLEVEL_GRID = 1024
_BISECT_ITERS = 60


def _sublevel_intervals(
    path: Path, z: Phantom, order: OrderKind
) -> list[tuple[float, float]]:
    """Parameter intervals where the path point is at or below z.

    The indicator is sampled on a dense grid and every transition is refined
    by bisection, which handles both monotone orders along the path and the
    general finite-union case.
    """
    t0, t1 = path.t0, path.t1
    ts = [t0 + (t1 - t0) * k / (_SUBLEVEL_GRID - 1) for k in range(_SUBLEVEL_GRID)]
    flags = [leq(path_point(path, t), z, order) for t in ts]

    def refine(lo: float, hi: float, lo_flag: bool) -> float:
        for _ in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if leq(path_point(path, mid), z, order) == lo_flag:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    intervals: list[tuple[float, float]] = []
    start: float | None = ts[0] if flags[0] else None
    for k in range(1, len(ts)):
        if flags[k] == flags[k - 1]:
            continue
        boundary = refine(ts[k - 1], ts[k], flags[k - 1])
        if flags[k]:
            start = boundary
        else:
            intervals.append((start, boundary))
            start = None
    if start is not None:
        intervals.append((start, ts[-1]))
    return intervals


def cdf_continuous(
    x: ContinuousPRV,
    z: Phantom,
    order: OrderKind = LEX,
    cfg: QuadratureConfig | None = None,
) -> Phantom:
    """Integral of the density over the order-sublevel set of the path."""
    _require_probability_grade(order)
    cfg = cfg or x.cfg
    if z is NEG_INF:
        return ZERO
    if z is POS_INF:
        return path_integral(x.density, x.path, cfg=cfg)
    acc = ZERO
    for lo, hi in _sublevel_intervals(x.path, z, order):
        acc = acc + path_integral(x.density, x.path, sub=(lo, hi), cfg=cfg)
    return acc


def xi_sup(x: ContinuousPRV, z: Phantom, order: OrderKind = LEX) -> Phantom:
    """The last path point (largest t) still at or below z in the order."""
    _require_probability_grade(order)
    intervals = _sublevel_intervals(x.path, z, order)
    if not intervals:
        raise EmptyRange(f"no path point at or below {z}")
    return path_point(x.path, intervals[-1][1])


def xi_inf(x: ContinuousPRV, z: Phantom, order: OrderKind = LEX) -> Phantom:
    """The first path point (smallest t) at or above z in the order."""
    _require_probability_grade(order)
    sub = _sublevel_intervals(x.path, z, order)
    t0, t1 = x.path.t0, x.path.t1
    eps = 1e-9 * max(1.0, abs(t0), abs(t1))
    # Superlevel set = complement of the (open part of the) sublevel set,
    # plus any boundary points equivalent to z.
    if not sub:
        return path_point(x.path, t0)
    first_lo, first_hi = sub[0]
    if first_lo > t0 + eps:
        return path_point(x.path, t0)
    if first_hi >= t1 - eps and len(sub) == 1:
        last = path_point(x.path, t1)
        if compare(last, z, order) is Comparison.EQUIVALENT:
            return last
        raise EmptyRange(f"no path point at or above {z}")
    return path_point(x.path, first_hi)


# -- moments ----------------------------------------------------------------------


def _component_sums(x: DiscretePRV, g_re, g_red) -> Phantom:
    """Realization-form expectation from per-component real functions."""
    s_re = sum(p.re * g_re(v.re) for v, p in x.support)
    s_red = sum(p.reduction * g_red(v.reduction) for v, p in x.support)
    return Phantom(s_re, s_red - s_re)


def moment(x: DiscretePRV | ContinuousPRV, n: int = 1,
           cfg: QuadratureConfig | None = None) -> Phantom:
    """E[X^n] in realization form."""
    if n < 1:
        raise ValueError("moment order must be a positive integer")
    if isinstance(x, DiscretePRV):
        return _component_sums(x, lambda a: a ** n, lambda a: a ** n)
    return path_integral(
        x.weighted(lambda z: z ** n), x.path, cfg=cfg or x.cfg
    )


def mean(x: DiscretePRV | ContinuousPRV,
         cfg: QuadratureConfig | None = None) -> Phantom:
    return moment(x, 1, cfg)


def variance(x: DiscretePRV | ContinuousPRV,
             cfg: QuadratureConfig | None = None) -> Phantom:
    """Var X = E[X^2] - E[X]^2, assembled per component."""
    m1 = moment(x, 1, cfg)
    m2 = moment(x, 2, cfg)
    v_re = m2.re - m1.re ** 2
    v_red = m2.reduction - m1.reduction ** 2
    return Phantom(v_re, v_red - v_re)


def std_dev(x: DiscretePRV | ContinuousPRV,
            cfg: QuadratureConfig | None = None) -> Phantom:
    """Nonnegative square root of the variance.

    Tiny negative components from roundoff are clamped to zero.
    """
    var = variance(x, cfg)
    v_re = max(var.re, 0.0) if var.re > -1e-12 else var.re
    v_red = max(var.reduction, 0.0) if var.reduction > -1e-12 else var.reduction
    return nth_root(Phantom(v_re, v_red - v_re), 2)


def expect_fn(
    x: DiscretePRV | ContinuousPRV,
    g: Callable[[Phantom], Phantom],
    cfg: QuadratureConfig | None = None,
) -> Phantom:
    """E[g(X)] for a phantom-valued g defined on the support or path."""
    if isinstance(x, DiscretePRV):
        s_re = sum(p.re * g(v).re for v, p in x.support)
        s_red = sum(p.reduction * g(v).reduction for v, p in x.support)
        return Phantom(s_re, s_red - s_re)
    return path_integral(x.weighted(g), x.path, cfg=cfg or x.cfg)


# -- joint distributions -------------------------------------------------------------


def marginals(j: JointDiscretePRV) -> tuple[DiscretePRV, DiscretePRV]:
    def accumulate(index: int) -> DiscretePRV:
        acc: dict[tuple[float, float], tuple[Phantom, Phantom]] = {}
        for pair, p in j.support:
            v = pair[index]
            key = (v.re, v.ph)
            if key in acc:
                acc[key] = (v, acc[key][1] + p)
            else:
                acc[key] = (v, p)
        return DiscretePRV(tuple(acc.values()))

    return accumulate(0), accumulate(1)


def joint_independent(j: JointDiscretePRV, tol: float = STAT_EQ_TOL) -> bool:
    mx, my = marginals(j)
    for (vx, vy), p in j.support:
        prod = pmf(mx, vx) * pmf(my, vy)
        if abs(p.re - prod.re) > tol or abs(p.ph - prod.ph) > tol:
            return False
    # values absent from the support must have zero product mass
    present = {((vx.re, vx.ph), (vy.re, vy.ph)) for (vx, vy), _ in j.support}
    for vx, px in mx.support:
        for vy, py in my.support:
            if ((vx.re, vx.ph), (vy.re, vy.ph)) in present:
                continue
            prod = px * py
            if abs(prod.re) > tol or abs(prod.ph) > tol:
                return False
    return True


def _joint_component_mean(j: JointDiscretePRV, h_re, h_red) -> Phantom:
    s_re = sum(p.re * h_re(vx.re, vy.re) for (vx, vy), p in j.support)
    s_red = sum(
        p.reduction * h_red(vx.reduction, vy.reduction) for (vx, vy), p in j.support
    )
    return Phantom(s_re, s_red - s_re)


def covariance(j: JointDiscretePRV) -> Phantom:
    """Cov(X,Y) = E[XY] - E[X]E[Y], assembled per component."""
    mxy = _joint_component_mean(j, lambda a, b: a * b, lambda a, b: a * b)
    mx, my = marginals(j)
    ex, ey = moment(mx, 1), moment(my, 1)
    c_re = mxy.re - ex.re * ey.re
    c_red = mxy.reduction - ex.reduction * ey.reduction
    return Phantom(c_re, c_red - c_re)


def correlation(j: JointDiscretePRV) -> Phantom:
    """Cov(X,Y) / (sd(X) sd(Y)); both variances must be invertible."""
    mx, my = marginals(j)
    vx, vy = variance(mx), variance(my)
    if not (is_invertible(vx) and is_invertible(vy)):
        raise DegenerateVariance(f"variances {vx}, {vy} are not both invertible")
    cov = covariance(j)
    r_re = cov.re / math.sqrt(vx.re * vy.re)
    r_red = cov.reduction / math.sqrt(vx.reduction * vy.reduction)
    return Phantom(r_re, r_red - r_re)


# -- moment generating functions ------------------------------------------------------


def mgf(x: DiscretePRV | ContinuousPRV, zeta: Phantom,
        cfg: QuadratureConfig | None = None) -> Phantom:
    """M_X(zeta) = E[e^{zeta X}] in realization form."""
    if isinstance(x, DiscretePRV):
        return _component_sums(
            x,
            lambda a: math.exp(zeta.re * a),
            lambda a: math.exp(zeta.reduction * a),
        )
    zr, zd = zeta.re, zeta.reduction

    def integrand(z: Phantom) -> Phantom:
        e_re = math.exp(zr * z.re)
        return Phantom(e_re, math.exp(zd * z.reduction) - e_re)

    return path_integral(x.weighted(integrand), x.path, cfg=cfg or x.cfg)


def mgf_linear(
    x: DiscretePRV | ContinuousPRV,
    u: Phantom,
    v: Phantom,
    zeta: Phantom,
    cfg: QuadratureConfig | None = None,
) -> Phantom:
    """MGF of uX + v: e^{v zeta} M_X(u zeta)."""
    from .ring import exp as ph_exp

    return ph_exp(v * zeta) * mgf(x, u * zeta, cfg)


def mgf_sum(xs: Sequence[DiscretePRV | ContinuousPRV], zeta: Phantom,
            cfg: QuadratureConfig | None = None) -> Phantom:
    """MGF of an independent sum: the product of the MGFs."""
    acc = ONE
    for x in xs:
        acc = acc * mgf(x, zeta, cfg)
    return acc
