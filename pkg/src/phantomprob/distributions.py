"""Named phantom distributions and their closed-form statistics.

Discrete families are built in realization form: the real component of
each probability is the classical pmf at the real parameter, the reduced
component is the classical pmf at the reduced parameter.  Infinite
families (geometric, Poisson) are truncated at an explicit cutoff and the
residual tail mass is attached to the result rather than folded back in.

Continuous families carry realization-form densities: each component of
the integrand density * tangent is the classical density in its own
coordinate times that coordinate's speed, so normalization and the
closed-form moments hold on any componentwise-monotone path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .calculus import DEFAULT_QUADRATURE, Path, QuadratureConfig
from .randvar import (
    ContinuousPRV,
    DegenerateVariance,
    DiscretePRV,
    cdf_continuous,
)
from .ring import (
    LEX,
    ONE,
    OrderKind,
    Phantom,
    PhantomError,
    ZERO,
    classify,
    SignClass,
    exp as ph_exp,
    is_invertible,
    is_pseudo_positive,
)

__all__ = [
    "BadParameter",
    "Bernoulli",
    "Binomial",
    "Geometric",
    "Poisson",
    "Exponential",
    "Normal",
    "StdNormal",
    "build",
    "closed_form_stats",
    "standardize",
    "phi",
    "real_line_path",
    "phantom_line_path",
]

#: Reduced- and real-tail residual bound used to pick automatic cutoffs.
TAIL_BOUND = 1e-12


class BadParameter(PhantomError):
    pass


def _check_success_prob(p: Phantom, name: str) -> None:
    ok = (
        0.0 < p.re < 1.0
        and 0.0 < p.reduction < 1.0
        and classify(p) not in (SignClass.ZERO, SignClass.ZERO_DIVISOR)
    )
    if not ok:
        raise BadParameter(f"{name} needs a success probability strictly inside "
                           f"the zone with no zero component, got {p}")


def _check_pseudo_positive(z: Phantom, name: str) -> None:
    if not is_pseudo_positive(z):
        raise BadParameter(f"{name} must be pseudo positive, got {z}")


# -- paths --------------------------------------------------------------------


def real_line_path(lo: float, hi: float) -> Path:
    """The segment of the real axis from lo to hi, parameterized by x."""
    return Path(
        a=lambda t: t,
        b=lambda t: 0.0,
        t0=lo,
        t1=hi,
        a_deriv=lambda t: 1.0,
        b_deriv=lambda t: 0.0,
        param_of=lambda z: z.re,
    )


def phantom_line_path(z0: Phantom, z1: Phantom) -> Path:
    """Straight segment from z0 to z1 with an inverse parameterization."""
    dre = z1.re - z0.re
    dph = z1.ph - z0.ph
    dred = dre + dph
    if abs(dre) >= abs(dred) and dre != 0.0:
        param_of = lambda z: (z.re - z0.re) / dre
    elif dred != 0.0:
        param_of = lambda z: (z.reduction - z0.reduction) / dred
    else:
        raise BadParameter("degenerate path endpoints")
    return Path(
        a=lambda t: z0.re + t * dre,
        b=lambda t: z0.ph + t * dph,
        t0=0.0,
        t1=1.0,
        a_deriv=lambda t: dre,
        b_deriv=lambda t: dph,
        param_of=param_of,
    )


# -- specs --------------------------------------------------------------------


@dataclass(frozen=True)
class Bernoulli:
    p: Phantom

    def __post_init__(self):
        _check_success_prob(self.p, "Bernoulli")


@dataclass(frozen=True)
class Binomial:
    n: int
    p: Phantom

    def __post_init__(self):
        if self.n < 1:
            raise BadParameter("Binomial needs n >= 1")
        _check_success_prob(self.p, "Binomial")


@dataclass(frozen=True)
class Geometric:
    p: Phantom
    cutoff: int | None = None

    def __post_init__(self):
        _check_success_prob(self.p, "Geometric")
        if self.cutoff is not None and self.cutoff < 1:
            raise BadParameter("Geometric cutoff must be >= 1")


@dataclass(frozen=True)
class Poisson:
    lam: Phantom
    cutoff: int | None = None

    def __post_init__(self):
        _check_pseudo_positive(self.lam, "Poisson rate")
        if self.cutoff is not None and self.cutoff < 1:
            raise BadParameter("Poisson cutoff must be >= 1")


@dataclass(frozen=True)
class Exponential:
    lam: Phantom
    path: Path | None = None

    def __post_init__(self):
        _check_pseudo_positive(self.lam, "Exponential rate")


@dataclass(frozen=True)
class Normal:
    mu: Phantom
    sigma: Phantom
    path: Path | None = None

    def __post_init__(self):
        _check_pseudo_positive(self.sigma, "Normal scale")


@dataclass(frozen=True)
class StdNormal:
    path: Path | None = None


DistSpec = Bernoulli | Binomial | Geometric | Poisson | Exponential | Normal | StdNormal


# -- builders -----------------------------------------------------------------


def _pair(v_re: float, v_red: float) -> Phantom:
    return Phantom(v_re, v_red - v_re)


def _build_bernoulli(spec: Bernoulli) -> DiscretePRV:
    return DiscretePRV(
        ((ZERO, ONE - spec.p), (ONE, spec.p)),
        origin=spec,
    )


def _build_binomial(spec: Binomial) -> DiscretePRV:
    n, p = spec.n, spec.p
    support = []
    for k in range(n + 1):
        c = math.comb(n, k)
        q_re = c * p.re ** k * (1.0 - p.re) ** (n - k)
        q_red = c * p.reduction ** k * (1.0 - p.reduction) ** (n - k)
        support.append((Phantom(float(k), 0.0), _pair(q_re, q_red)))
    return DiscretePRV(tuple(support), origin=spec)


def _geometric_cutoff(p: Phantom) -> int:
    # (1-p)^N < TAIL_BOUND on both components
    n = 1
    for q in (1.0 - p.re, 1.0 - p.reduction):
        if q <= 0.0:
            continue
        n = max(n, math.ceil(math.log(TAIL_BOUND) / math.log(q)))
    return n


def _build_geometric(spec: Geometric) -> DiscretePRV:
    p = spec.p
    cutoff = spec.cutoff if spec.cutoff is not None else _geometric_cutoff(p)
    support = []
    for k in range(1, cutoff + 1):
        q_re = (1.0 - p.re) ** (k - 1) * p.re
        q_red = (1.0 - p.reduction) ** (k - 1) * p.reduction
        support.append((Phantom(float(k), 0.0), _pair(q_re, q_red)))
    residual = _pair((1.0 - p.re) ** cutoff, (1.0 - p.reduction) ** cutoff)
    return DiscretePRV(tuple(support), residual=residual, origin=spec)


def _poisson_cutoff(lam: Phantom) -> int:
    cutoff = 1
    for rate in (lam.re, lam.reduction):
        term = math.exp(-rate)
        total = term
        k = 0
        while 1.0 - total > TAIL_BOUND and k < 100000:
            k += 1
            term *= rate / k
            total += term
        cutoff = max(cutoff, k)
    return cutoff


def _build_poisson(spec: Poisson) -> DiscretePRV:
    lam = spec.lam
    cutoff = spec.cutoff if spec.cutoff is not None else _poisson_cutoff(lam)
    support = []
    t_re = math.exp(-lam.re)
    t_red = math.exp(-lam.reduction)
    s_re = s_red = 0.0
    for k in range(cutoff + 1):
        if k > 0:
            t_re *= lam.re / k
            t_red *= lam.reduction / k
        s_re += t_re
        s_red += t_red
        support.append((Phantom(float(k), 0.0), _pair(t_re, t_red)))
    residual = _pair(1.0 - s_re, 1.0 - s_red)
    return DiscretePRV(tuple(support), residual=residual, origin=spec)


def _build_exponential(spec: Exponential) -> ContinuousPRV:
    lam = spec.lam
    path = spec.path
    if path is None:
        horizon = 40.0 / min(lam.re, lam.reduction)
        path = real_line_path(0.0, horizon)

    # Realization form of the classical density: each component of the
    # integrand f * tangent is then the classical density in its own
    # coordinate times that coordinate's speed, so normalization and the
    # closed-form moments hold on any componentwise-monotone path.
    def density(z: Phantom) -> Phantom:
        return lam * ph_exp(-1.0 * (lam * z))

    return ContinuousPRV(path, density, origin=spec)


_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _build_normal(spec: Normal) -> ContinuousPRV:
    mu, sigma = spec.mu, spec.sigma
    path = spec.path
    if path is None:
        path = phantom_line_path(mu - 12.0 * sigma, mu + 12.0 * sigma)
    two_sigma_sq = 2.0 * (sigma * sigma)
    coeff = (sigma * _SQRT_2PI).inverse()

    # Same realization-form convention as the exponential density.
    def density(z: Phantom) -> Phantom:
        d = z - mu
        return coeff * ph_exp(-1.0 * (d * d / two_sigma_sq))

    return ContinuousPRV(path, density, origin=spec)


def build(spec: DistSpec) -> DiscretePRV | ContinuousPRV:
    """Construct the random variable described by spec."""
    if isinstance(spec, Bernoulli):
        return _build_bernoulli(spec)
    if isinstance(spec, Binomial):
        return _build_binomial(spec)
    if isinstance(spec, Geometric):
        return _build_geometric(spec)
    if isinstance(spec, Poisson):
        return _build_poisson(spec)
    if isinstance(spec, Exponential):
        return _build_exponential(spec)
    if isinstance(spec, StdNormal):
        inner = _build_normal(Normal(ZERO, ONE, spec.path))
        return ContinuousPRV(inner.path, inner.density, origin=spec)
    if isinstance(spec, Normal):
        return _build_normal(spec)
    raise BadParameter(f"unknown distribution spec {spec!r}")


def closed_form_stats(spec: DistSpec) -> tuple[Phantom, Phantom]:
    """Analytic (mean, variance) via ring arithmetic."""
    if isinstance(spec, Bernoulli):
        return spec.p, spec.p - spec.p * spec.p
    if isinstance(spec, Binomial):
        n = Phantom(float(spec.n), 0.0)
        return n * spec.p, n * spec.p * (ONE - spec.p)
    if isinstance(spec, Geometric):
        inv_p = spec.p.inverse()
        return inv_p, (ONE - spec.p) * inv_p * inv_p
    if isinstance(spec, Poisson):
        return spec.lam, spec.lam
    if isinstance(spec, Exponential):
        inv = spec.lam.inverse()
        return inv, inv * inv
    if isinstance(spec, Normal):
        return spec.mu, spec.sigma * spec.sigma
    if isinstance(spec, StdNormal):
        return ZERO, ONE
    raise BadParameter(f"unknown distribution spec {spec!r}")


def standardize(x: ContinuousPRV) -> tuple[Phantom, Phantom]:
    """Coefficients (u, v) so that uX + v has mean 0 and variance 1."""
    spec = x.origin
    if isinstance(spec, StdNormal):
        return ONE, ZERO
    if not isinstance(spec, Normal):
        raise BadParameter("standardize applies to normal random variables")
    if not is_invertible(spec.sigma):
        raise DegenerateVariance(f"scale {spec.sigma} is not invertible")
    u = spec.sigma.inverse()
    return u, -(spec.mu / spec.sigma)


def phi(
    z: Phantom,
    path: Path | None = None,
    order: OrderKind = LEX,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> Phantom:
    """The standard-normal CDF at z along the given path."""
    x = build(StdNormal(path))
    return cdf_continuous(x, z, order, cfg)
