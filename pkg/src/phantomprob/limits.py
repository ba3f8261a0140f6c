"""Probabilistic inequalities and Monte-Carlo limit-theorem experiments.

The limit theorems are verified component-wise: a phantom random variable
induces two classical real random variables (real components of values and
probabilities, or reductions of both), and the weak/strong laws and the
central limit theorem are checked on whichever component the configuration
selects.  Sampling uses a counter-based generator so every repetition owns
a disjoint, reproducible substream.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .kernels import uniforms
from .randvar import DegenerateVariance, DiscretePRV, moment
from .ring import (
    LEX,
    OrderKind,
    Phantom,
    PhantomError,
    ZERO,
    geq,
    is_pseudo_positive,
    leq,
    phantom_abs,
)

__all__ = [
    "Selection",
    "SimConfig",
    "SimReport",
    "BoundReport",
    "BadVariant",
    "markov_bound",
    "chebyshev_bound",
    "chebyshev_c_bound",
    "normal_cdf",
    "ks_statistic",
    "sample_iid",
    "wlln_experiment",
    "clt_experiment",
    "slln_experiment",
]


class BadVariant(PhantomError):
    pass


class Selection(enum.Enum):
    REAL = "re"
    REDUCED = "red"
    MIDPOINT = "mid"


@dataclass(frozen=True)
class SimConfig:
    seed: int = 0
    reps: int = 1
    n: int = 1
    selection: Selection = Selection.REAL

    def __post_init__(self):
        if self.reps < 1 or self.n < 1:
            raise ValueError("reps and n must be positive")


@dataclass(frozen=True)
class SimReport:
    empirical_mean: float
    target_mean: float
    deviation: float
    ks_statistic: float | None = None
    fraction_within: float | None = None
    per_n_curve: tuple[tuple[int, float], ...] = ()
    # (bin upper edge, empirical CDF, target CDF) rows for CLT runs
    histogram: tuple[tuple[float, float, float], ...] = ()


@dataclass(frozen=True)
class BoundReport:
    lhs: object  # Phantom or float depending on the variant
    rhs: object
    holds: bool


# -- inequalities -------------------------------------------------------------


_HOLD_TOL = 1e-12


def _mean_abs(x: DiscretePRV) -> Phantom:
    return sum((p * phantom_abs(v) for v, p in x.support), ZERO)


def markov_bound(
    x: DiscretePRV,
    z: Phantom,
    variant: str = "abs_abs",
    order: OrderKind = LEX,
) -> BoundReport:
    """Tail bounds of Markov type.

    ``order``   : P(X >= z) against E[X]/z, compared in the given order;
                  needs z pseudo positive and a pseudo-nonnegative variable.
    ``abs_order``: P(|X| >= |z|) against E[|X|]/|z|, compared in the order.
    ``abs_abs`` : the moduli of both sides compared as reals.
    """
    if variant == "order":
        if not is_pseudo_positive(z):
            raise BadVariant(f"order variant needs pseudo positive z, got {z}")
        for v, _ in x.support:
            if v.re < 0 or v.reduction < 0:
                raise BadVariant(f"order variant needs nonnegative values, got {v}")
        lhs = sum((p for v, p in x.support if geq(v, z, order)), ZERO)
        rhs = moment(x, 1) / z
        return BoundReport(lhs, rhs, leq(lhs, rhs, order))
    az = phantom_abs(z)
    if az <= _HOLD_TOL:
        raise BadVariant("z must be nonzero")
    tail = sum((p for v, p in x.support if phantom_abs(v) >= az - _HOLD_TOL), ZERO)
    bound = _mean_abs(x) / az
    if variant == "abs_order":
        return BoundReport(tail, bound, leq(tail, bound, order))
    if variant == "abs_abs":
        lhs = phantom_abs(tail)
        rhs = phantom_abs(bound)
        return BoundReport(lhs, rhs, lhs <= rhs + _HOLD_TOL)
    raise BadVariant(f"unknown variant {variant!r}")


def chebyshev_bound(x: DiscretePRV, z: Phantom) -> BoundReport:
    """|P(| |X| - mean(|X|) | >= |z|)| against the second-moment bound.

    The spread in the numerator of the bound is the expected squared
    modulus of the deviation |X| - mean(|X|).  When values and
    probabilities are all real this is the classical variance and the
    whole statement reduces to the classical Chebyshev inequality.
    """
    az = phantom_abs(z)
    if az <= _HOLD_TOL:
        raise BadVariant("z must be nonzero")
    mu = _mean_abs(x)
    spread = sum(
        (p * phantom_abs(Phantom(phantom_abs(v), 0.0) - mu) ** 2
         for v, p in x.support),
        ZERO,
    )
    tail = sum(
        (p for v, p in x.support
         if phantom_abs(Phantom(phantom_abs(v), 0.0) - mu) >= az - _HOLD_TOL),
        ZERO,
    )
    lhs = phantom_abs(tail)
    rhs = phantom_abs(spread) / (az * az)
    return BoundReport(lhs, rhs, lhs <= rhs + _HOLD_TOL)


def chebyshev_c_bound(c: float) -> float:
    """Bound for a deviation of c standard units: exactly 1/c^2."""
    if c <= 0:
        raise BadVariant("c must be positive")
    return 1.0 / (c * c)


# -- classical normal CDF and KS distance --------------------------------------


def normal_cdf(x: float) -> float:
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def ks_statistic(samples: np.ndarray) -> float:
    """Sup distance between the empirical CDF and the standard normal CDF."""
    w = np.sort(np.asarray(samples, dtype=np.float64))
    n = len(w)
    phi = 0.5 * (1.0 + np.vectorize(math.erf)(w / math.sqrt(2.0)))
    upper = np.arange(1, n + 1) / n - phi
    lower = phi - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


# -- sampling -------------------------------------------------------------------


def _component_table(
    x: DiscretePRV, selection: Selection
) -> tuple[np.ndarray, np.ndarray]:
    """The real (values, probabilities) pair for the selected component."""
    if selection is Selection.REAL:
        values = np.array([v.re for v, _ in x.support])
        probs = np.array([p.re for _, p in x.support])
    elif selection is Selection.REDUCED:
        values = np.array([v.reduction for v, _ in x.support])
        probs = np.array([p.reduction for _, p in x.support])
    else:
        values = np.array([v.re + 0.5 * v.ph for v, _ in x.support])
        probs = np.array([p.re + 0.5 * p.ph for _, p in x.support])
    if probs.min() < -1e-12:
        raise ValueError("selected component has a negative probability")
    probs = np.clip(probs, 0.0, None)
    return values, probs / probs.sum()


def sample_iid(
    x: DiscretePRV, cfg: SimConfig, stream: int = 0, counter: int = 0
) -> np.ndarray:
    """cfg.n real draws from the selected component distribution."""
    values, probs = _component_table(x, cfg.selection)
    edges = np.cumsum(probs)
    u = uniforms(cfg.seed, stream, counter, cfg.n)
    idx = np.searchsorted(edges, u, side="right")
    idx = np.minimum(idx, len(values) - 1)
    return values[idx]


def _target_mean(x: DiscretePRV, selection: Selection) -> float:
    values, probs = _component_table(x, selection)
    return float(values @ probs)


# -- experiments -----------------------------------------------------------------


def wlln_experiment(x: DiscretePRV, cfg: SimConfig) -> SimReport:
    """Deviation of the running mean from the component mean on a log grid."""
    target = _target_mean(x, cfg.selection)
    samples = sample_iid(x, cfg)
    running = np.cumsum(samples) / np.arange(1, cfg.n + 1)
    curve = []
    k = 1
    while k < cfg.n:
        curve.append((k, float(abs(running[k - 1] - target))))
        k *= 2
    curve.append((cfg.n, float(abs(running[-1] - target))))
    return SimReport(
        empirical_mean=float(running[-1]),
        target_mean=target,
        deviation=float(abs(running[-1] - target)),
        per_n_curve=tuple(curve),
    )


def clt_experiment(x: DiscretePRV, cfg: SimConfig) -> SimReport:
    """KS distance of standardized sums from the standard normal CDF."""
    values, probs = _component_table(x, cfg.selection)
    mu = float(values @ probs)
    var = float((values ** 2) @ probs) - mu * mu
    if var <= 1e-15:
        raise DegenerateVariance(f"component variance {var} is not positive")
    sigma = math.sqrt(var)
    edges = np.cumsum(probs)
    w = np.empty(cfg.reps)
    scale = 1.0 / (sigma * math.sqrt(cfg.n))
    for r in range(cfg.reps):
        u = uniforms(cfg.seed, r, 0, cfg.n)
        idx = np.minimum(np.searchsorted(edges, u, side="right"), len(values) - 1)
        w[r] = (values[idx].sum() - cfg.n * mu) * scale
    ks = ks_statistic(w)
    edges_w = np.linspace(-4.0, 4.0, 33)
    hist = tuple(
        (float(e), float(np.mean(w <= e)), normal_cdf(float(e))) for e in edges_w
    )
    return SimReport(
        empirical_mean=float(w.mean()),
        target_mean=0.0,
        deviation=float(abs(w.mean())),
        ks_statistic=ks,
        histogram=hist,
    )


def slln_experiment(x: DiscretePRV, cfg: SimConfig, eps: float = 0.01) -> SimReport:
    """Fraction of reps whose trailing running means stay within eps of the mean."""
    target = _target_mean(x, cfg.selection)
    values, probs = _component_table(x, cfg.selection)
    edges = np.cumsum(probs)
    tail_start = max(1, cfg.n - cfg.n // 10)
    within = 0
    final_means = np.empty(cfg.reps)
    for r in range(cfg.reps):
        u = uniforms(cfg.seed, r, 0, cfg.n)
        idx = np.minimum(np.searchsorted(edges, u, side="right"), len(values) - 1)
        running = np.cumsum(values[idx]) / np.arange(1, cfg.n + 1)
        final_means[r] = running[-1]
        if np.max(np.abs(running[tail_start - 1:] - target)) < eps:
            within += 1
    emp = float(final_means.mean())
    return SimReport(
        empirical_mean=emp,
        target_mean=target,
        deviation=float(abs(emp - target)),
        fraction_within=within / cfg.reps,
    )
