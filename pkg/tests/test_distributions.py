"""Tests for the named distribution builders and their statistics."""

import math

import pytest

from phantomprob.calculus import path_integral
from phantomprob.distributions import (
    BadParameter,
    Bernoulli,
    Binomial,
    Exponential,
    Geometric,
    Normal,
    Poisson,
    StdNormal,
    build,
    closed_form_stats,
    phantom_line_path,
    phi,
    real_line_path,
    standardize,
)
from phantomprob.randvar import (
    DiscretePRV,
    cdf_continuous,
    mean,
    pmf,
    variance,
)
from phantomprob.ring import ONE, Phantom, ZERO


P = Phantom(0.3, 0.2)  # reduction 0.5
LAM = Phantom(2.0, -0.5)  # reduction 1.5
MU = Phantom(1.0, 0.5)
SIGMA = Phantom(2.0, -0.5)


def approx_phantom(z, w, tol=1e-9):
    assert z.re == pytest.approx(w.re, abs=tol)
    assert z.ph == pytest.approx(w.ph, abs=tol)


# -- parameter validation ------------------------------------------------------


@pytest.mark.parametrize(
    "bad",
    [
        Phantom(0.0, 0.5),      # zero real component
        Phantom(0.5, -0.5),     # zero reduction
        Phantom(1.0, 0.2),      # real component not < 1
        Phantom(-0.1, 0.3),     # negative real component
        Phantom(0.9, 0.2),      # reduction > 1
    ],
)
def test_success_prob_rejected(bad):
    with pytest.raises(BadParameter):
        Bernoulli(bad)
    with pytest.raises(BadParameter):
        Binomial(5, bad)
    with pytest.raises(BadParameter):
        Geometric(bad)


def test_other_bad_parameters():
    with pytest.raises(BadParameter):
        Binomial(0, P)
    with pytest.raises(BadParameter):
        Geometric(P, cutoff=0)
    with pytest.raises(BadParameter):
        Poisson(Phantom(-1.0, 0.5))
    with pytest.raises(BadParameter):
        Poisson(Phantom(1.0, -1.0))  # reduction zero
    with pytest.raises(BadParameter):
        Exponential(Phantom(0.0, 1.0))
    with pytest.raises(BadParameter):
        Normal(ZERO, Phantom(1.0, -2.0))


# -- discrete builders ---------------------------------------------------------


def test_bernoulli_pmf_is_realization_form():
    x = build(Bernoulli(P))
    approx_phantom(pmf(x, ONE), P)
    approx_phantom(pmf(x, ZERO), ONE - P)


def test_binomial_pmf_matches_classical_on_each_component():
    n = 6
    x = build(Binomial(n, P))
    for k in range(n + 1):
        q = pmf(x, Phantom(float(k), 0.0))
        c = math.comb(n, k)
        assert q.re == pytest.approx(c * P.re**k * (1 - P.re) ** (n - k))
        assert q.reduction == pytest.approx(
            c * P.reduction**k * (1 - P.reduction) ** (n - k)
        )


def test_binomial_is_bernoulli_convolution():
    n = 4
    x = build(Binomial(n, P))
    # n-fold convolution of the Bernoulli pmf, done directly in the ring
    acc = {0: ONE}
    for _ in range(n):
        nxt = {}
        for k, w in acc.items():
            for step, wp in ((0, ONE - P), (1, P)):
                nxt[k + step] = nxt.get(k + step, ZERO) + w * wp
        acc = nxt
    for k, w in acc.items():
        approx_phantom(pmf(x, Phantom(float(k), 0.0)), w, tol=1e-12)


def test_geometric_auto_cutoff_residual_tiny():
    x = build(Geometric(P))
    assert abs(x.residual.re) < 1e-12
    assert abs(x.residual.reduction) < 1e-12
    total = ZERO
    for _, w in x.support:
        total = total + w
    total = total + x.residual
    approx_phantom(total, ONE, tol=1e-9)


def test_geometric_explicit_cutoff_residual_exact():
    cut = 5
    x = build(Geometric(P, cutoff=cut))
    assert len(x.support) == cut
    assert x.residual.re == pytest.approx((1 - P.re) ** cut)
    assert x.residual.reduction == pytest.approx((1 - P.reduction) ** cut)


def test_poisson_auto_cutoff_residual_tiny():
    x = build(Poisson(LAM))
    assert abs(x.residual.re) < 1e-11
    assert abs(x.residual.reduction) < 1e-11
    q = pmf(x, Phantom(3.0, 0.0))
    assert q.re == pytest.approx(math.exp(-LAM.re) * LAM.re**3 / 6.0)
    assert q.reduction == pytest.approx(
        math.exp(-LAM.reduction) * LAM.reduction**3 / 6.0
    )


# -- closed-form statistics vs empirical moments -------------------------------


@pytest.mark.parametrize(
    "spec",
    [
        Bernoulli(P),
        Binomial(7, P),
        Geometric(P),
        Poisson(LAM),
    ],
)
def test_discrete_moments_match_closed_form(spec):
    x = build(spec)
    m, v = closed_form_stats(spec)
    approx_phantom(mean(x), m, tol=1e-8)
    approx_phantom(variance(x), v, tol=1e-7)


def test_exponential_moments_match_closed_form():
    spec = Exponential(LAM)
    x = build(spec)
    m, v = closed_form_stats(spec)
    approx_phantom(mean(x), m, tol=1e-8)
    approx_phantom(variance(x), v, tol=1e-8)


def test_normal_moments_match_closed_form():
    spec = Normal(MU, SIGMA)
    x = build(spec)
    m, v = closed_form_stats(spec)
    approx_phantom(mean(x), m, tol=1e-8)
    approx_phantom(variance(x), v, tol=1e-7)


# -- normalization on phantom paths --------------------------------------------


def test_exponential_normalizes_on_wiggly_phantom_path():
    from phantomprob.calculus import Path

    spec = Exponential(Phantom(1.0, 0.0))
    horizon = 40.0
    wiggly = Path(
        a=lambda t: t,
        b=lambda t: 0.1 * math.sin(t),
        t0=0.0,
        t1=horizon,
        a_deriv=lambda t: 1.0,
        b_deriv=lambda t: 0.1 * math.cos(t),
    )
    x = build(Exponential(spec.lam, path=wiggly))
    total = path_integral(x.weighted(lambda z: ONE), wiggly)
    approx_phantom(total, ONE, tol=1e-9)


def test_normal_normalizes_on_default_phantom_path():
    x = build(Normal(MU, SIGMA))
    total = path_integral(x.weighted(lambda z: ONE), x.path)
    approx_phantom(total, ONE, tol=1e-9)


def test_exponential_cdf_median():
    lam = Phantom(1.0, 0.0)
    x = build(Exponential(lam))
    med = math.log(2.0)
    c = cdf_continuous(x, Phantom(med, 0.0))
    approx_phantom(c, Phantom(0.5, 0.0), tol=1e-8)


# -- standardize and phi -------------------------------------------------------


def test_standardize_normal():
    x = build(Normal(MU, SIGMA))
    u, v = standardize(x)
    approx_phantom(u * MU + v, ZERO, tol=1e-12)
    approx_phantom(u * SIGMA, ONE, tol=1e-12)


def test_standardize_stdnormal_identity():
    x = build(StdNormal())
    u, v = standardize(x)
    assert u == ONE and v == ZERO


def test_standardize_rejects_non_normal():
    x = build(Exponential(LAM))
    with pytest.raises(BadParameter):
        standardize(x)


def test_phi_at_zero_is_half():
    c = phi(ZERO)
    assert c.re == pytest.approx(0.5, abs=2e-4)
    assert abs(c.ph) < 2e-4


def test_phi_classical_quantiles():
    for z, target in ((1.959964, 0.975), (-1.0, 0.158655), (1.0, 0.841345)):
        c = phi(Phantom(z, 0.0))
        assert c.re == pytest.approx(target, abs=2e-4)
        assert c.reduction == pytest.approx(target, abs=2e-4)


def test_phi_symmetry():
    c_plus = phi(Phantom(1.3, 0.0))
    c_minus = phi(Phantom(-1.3, 0.0))
    assert c_plus.re + c_minus.re == pytest.approx(1.0, abs=1e-6)


# -- paths ----------------------------------------------------------------------


def test_real_line_path_parameterization():
    p = real_line_path(-2.0, 3.0)
    z = p.point(1.5)
    assert z.re == 1.5 and z.ph == 0.0
    assert p.param_of(z) == 1.5


def test_phantom_line_path_roundtrip():
    z0 = Phantom(-1.0, 0.5)
    z1 = Phantom(2.0, -0.25)
    p = phantom_line_path(z0, z1)
    for t in (0.0, 0.25, 0.7, 1.0):
        assert p.param_of(p.point(t)) == pytest.approx(t, abs=1e-12)


def test_phantom_line_path_degenerate():
    with pytest.raises(BadParameter):
        phantom_line_path(ONE, ONE)


def test_build_attaches_origin():
    spec = Binomial(3, P)
    x = build(spec)
    assert x.origin is spec
    assert isinstance(x, DiscretePRV)
