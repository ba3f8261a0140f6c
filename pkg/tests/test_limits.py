"""Tests for inequalities, sampling kernels, and limit-theorem experiments."""

import math
import os
import random
import subprocess
import sys

import numpy as np
import pytest

from phantomprob.distributions import Bernoulli, Binomial, build
from phantomprob.kernels import BACKEND_NAME, uniforms
from phantomprob.limits import (
    BadVariant,
    Selection,
    SimConfig,
    chebyshev_bound,
    chebyshev_c_bound,
    clt_experiment,
    ks_statistic,
    markov_bound,
    normal_cdf,
    sample_iid,
    slln_experiment,
    wlln_experiment,
)
from phantomprob.randvar import DegenerateVariance, DiscretePRV
from phantomprob.ring import ONE, Phantom, ZERO


COIN = build(Bernoulli(Phantom(0.4, 0.2)))


def random_discrete(rng, k=5):
    """A valid discrete variable with phantom values and probabilities."""
    raw_re = [rng.uniform(0.05, 1.0) for _ in range(k)]
    raw_red = [rng.uniform(0.05, 1.0) for _ in range(k)]
    tot_re, tot_red = sum(raw_re), sum(raw_red)
    support = []
    for i, (wre, wred) in enumerate(zip(raw_re, raw_red)):
        prob = Phantom(wre / tot_re, wred / tot_red - wre / tot_re)
        value = Phantom(rng.uniform(-3.0, 3.0) + 7.0 * i, rng.uniform(-1.0, 1.0))
        support.append((value, prob))
    return DiscretePRV(tuple(support))


# -- uniform generator ----------------------------------------------------------


def test_uniforms_deterministic_and_in_unit_interval():
    a = uniforms(42, 3, 0, 1000)
    b = uniforms(42, 3, 0, 1000)
    assert np.array_equal(a, b)
    assert a.min() >= 0.0 and a.max() < 1.0


def test_uniforms_counter_is_a_window():
    whole = uniforms(7, 1, 0, 100)
    shifted = uniforms(7, 1, 40, 60)
    assert np.array_equal(whole[40:], shifted)


def test_uniforms_streams_disjoint():
    a = uniforms(1, 0, 0, 500)
    b = uniforms(1, 1, 0, 500)
    assert not np.array_equal(a, b)
    # seeds matter too
    c = uniforms(2, 0, 0, 500)
    assert not np.array_equal(a, c)


def test_uniforms_mean_and_spread_plausible():
    u = uniforms(0, 0, 0, 200000)
    assert abs(u.mean() - 0.5) < 0.005
    assert abs(u.var() - 1.0 / 12.0) < 0.005


def test_backends_agree_bit_for_bit():
    env = dict(os.environ, PHANTOMPROB_PURE_PYTHON="1")
    code = (
        "from phantomprob.kernels import uniforms, BACKEND_NAME\n"
        "import sys\n"
        "assert BACKEND_NAME == 'numpy', BACKEND_NAME\n"
        "sys.stdout.buffer.write(uniforms(123, 5, 17, 4096).tobytes())\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, check=True
    )
    assert out.stdout == uniforms(123, 5, 17, 4096).tobytes()


# -- Markov ----------------------------------------------------------------------


def test_markov_order_variant_classical():
    x = build(Binomial(6, Phantom(0.5, 0.0)))
    rep = markov_bound(x, Phantom(4.0, 0.0), variant="order")
    assert rep.holds
    # P(X >= 4) for Binomial(6, 1/2) is 22/64
    assert rep.lhs.re == pytest.approx(22.0 / 64.0)
    assert rep.rhs.re == pytest.approx(3.0 / 4.0)


def test_markov_order_variant_preconditions():
    with pytest.raises(BadVariant):
        markov_bound(COIN, Phantom(-1.0, 0.0), variant="order")
    neg = DiscretePRV(((Phantom(-1.0, 0.0), Phantom(0.5, 0.0)),
                       (ONE, Phantom(0.5, 0.0))))
    with pytest.raises(BadVariant):
        markov_bound(neg, ONE, variant="order")


def test_markov_unknown_variant_and_zero_z():
    with pytest.raises(BadVariant):
        markov_bound(COIN, ONE, variant="nope")
    with pytest.raises(BadVariant):
        markov_bound(COIN, ZERO, variant="abs_abs")


def test_markov_abs_abs_fuzz():
    rng = random.Random(7)
    for _ in range(300):
        x = random_discrete(rng)
        z = Phantom(rng.uniform(0.1, 20.0), rng.uniform(-2.0, 2.0))
        rep = markov_bound(x, z, variant="abs_abs")
        assert rep.holds, (x, z, rep)


def test_markov_collapses_to_classical_on_real_data():
    # All-real variable: abs_abs must match the classical Markov bound.
    x = DiscretePRV(((Phantom(1.0, 0.0), Phantom(0.25, 0.0)),
                     (Phantom(3.0, 0.0), Phantom(0.75, 0.0))))
    rep = markov_bound(x, Phantom(3.0, 0.0), variant="abs_abs")
    assert rep.lhs == pytest.approx(0.75)
    assert rep.rhs == pytest.approx(2.5 / 3.0)
    assert rep.holds


# -- Chebyshev --------------------------------------------------------------------


def test_chebyshev_classical_collapse():
    # Fair die: P(|X - 3.5| >= 2.5) = 1/3 <= Var/z^2 = (35/12)/6.25
    support = tuple(
        (Phantom(float(k), 0.0), Phantom(1.0 / 6.0, 0.0)) for k in range(1, 7)
    )
    x = DiscretePRV(support)
    rep = chebyshev_bound(x, Phantom(2.5, 0.0))
    assert rep.lhs == pytest.approx(1.0 / 3.0)
    assert rep.rhs == pytest.approx((35.0 / 12.0) / 6.25)
    assert rep.holds


def test_chebyshev_fuzz():
    rng = random.Random(11)
    for _ in range(300):
        x = random_discrete(rng)
        z = Phantom(rng.uniform(0.1, 10.0), rng.uniform(-1.0, 1.0))
        rep = chebyshev_bound(x, z)
        assert rep.holds, (x, z, rep)


def test_chebyshev_c_form():
    assert chebyshev_c_bound(2.0) == 0.25
    assert chebyshev_c_bound(3.0) == pytest.approx(1.0 / 9.0)
    with pytest.raises(BadVariant):
        chebyshev_c_bound(0.0)


# -- KS and normal CDF -------------------------------------------------------------


def test_normal_cdf_values():
    assert normal_cdf(0.0) == pytest.approx(0.5)
    assert normal_cdf(1.959964) == pytest.approx(0.975, abs=1e-6)
    assert normal_cdf(-1.0) == pytest.approx(0.158655, abs=1e-6)


def test_ks_statistic_of_true_normal_quantiles_small():
    # Deterministic normal quantiles give a tiny KS distance.
    n = 2000
    grid = (np.arange(1, n + 1) - 0.5) / n
    from math import sqrt
    # inverse via binary search on normal_cdf
    samples = np.empty(n)
    for i, q in enumerate(grid):
        lo, hi = -10.0, 10.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if normal_cdf(mid) < q:
                lo = mid
            else:
                hi = mid
        samples[i] = 0.5 * (lo + hi)
    assert ks_statistic(samples) < 1.0 / n + 1e-9
    assert ks_statistic(np.zeros(10)) > 0.4


# -- sampling and experiments -------------------------------------------------------


def test_sample_iid_matches_component_frequencies():
    cfg = SimConfig(seed=5, n=200000, selection=Selection.REAL)
    draws = sample_iid(COIN, cfg)
    assert set(np.unique(draws)) <= {0.0, 1.0}
    assert draws.mean() == pytest.approx(0.4, abs=0.005)

    cfg_red = SimConfig(seed=5, n=200000, selection=Selection.REDUCED)
    assert sample_iid(COIN, cfg_red).mean() == pytest.approx(0.6, abs=0.005)

    cfg_mid = SimConfig(seed=5, n=200000, selection=Selection.MIDPOINT)
    assert sample_iid(COIN, cfg_mid).mean() == pytest.approx(0.5, abs=0.005)


def test_wlln_deviation_shrinks():
    cfg = SimConfig(seed=3, n=1 << 16)
    rep = wlln_experiment(COIN, cfg)
    assert rep.target_mean == pytest.approx(0.4)
    assert rep.deviation < 0.01
    ns = [k for k, _ in rep.per_n_curve]
    assert ns == sorted(ns) and ns[-1] == cfg.n
    early = rep.per_n_curve[2][1]
    late = rep.per_n_curve[-1][1]
    assert late < max(early, 0.05)


def test_clt_ks_shrinks_with_n():
    small = clt_experiment(COIN, SimConfig(seed=1, reps=400, n=4))
    large = clt_experiment(COIN, SimConfig(seed=1, reps=400, n=256))
    assert large.ks_statistic < small.ks_statistic
    assert large.ks_statistic < 0.08
    assert len(large.histogram) == 33
    # histogram CDF columns are monotone and end near 1
    emp = [row[1] for row in large.histogram]
    assert emp == sorted(emp)
    assert emp[-1] > 0.99


def test_clt_rejects_constant_variable():
    const = DiscretePRV(((ONE, ONE),))
    with pytest.raises(DegenerateVariance):
        clt_experiment(const, SimConfig(seed=0, reps=10, n=4))


def test_slln_fraction_within():
    cfg = SimConfig(seed=9, reps=50, n=20000)
    rep = slln_experiment(COIN, cfg, eps=0.02)
    assert rep.fraction_within > 0.9
    assert rep.deviation < 0.01


def test_experiments_deterministic_per_seed():
    cfg = SimConfig(seed=17, reps=50, n=64)
    a = clt_experiment(COIN, cfg)
    b = clt_experiment(COIN, cfg)
    assert a == b
    c = clt_experiment(COIN, SimConfig(seed=18, reps=50, n=64))
    assert a.ks_statistic != c.ks_statistic


def test_backend_name_reported():
    assert BACKEND_NAME in ("cython", "numpy")
