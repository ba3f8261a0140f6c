import math
import random

import pytest

from phantomprob.calculus import (
    OutOfDomain,
    Path,
    PhantomPolynomial,
    QuadratureConfig,
    line_path,
    path_integral,
    path_point,
    path_tangent,
    poly_conjugate,
    poly_derivative,
    poly_eval,
)
from phantomprob.ring import ONE, Phantom, ZERO, conjugate


def rand_phantom(rng, lo=-2.0, hi=2.0):
    return Phantom(rng.uniform(lo, hi), rng.uniform(lo, hi))


def assert_close(z1: Phantom, z2: Phantom, tol=1e-10):
    assert z1.re == pytest.approx(z2.re, rel=tol, abs=tol)
    assert z1.ph == pytest.approx(z2.ph, rel=tol, abs=tol)


# -- polynomials ------------------------------------------------------------------


def test_trailing_zeros_stripped():
    f = PhantomPolynomial((ONE, ZERO, ZERO))
    assert f.degree == 0
    assert PhantomPolynomial((ZERO,)).coefficients == ()


def test_square_at_one_plus_p():
    f = PhantomPolynomial((ZERO, ZERO, ONE))  # z^2
    assert_close(poly_eval(f, Phantom(1, 1)), Phantom(1, 3))


def test_constant_polynomial():
    c = Phantom(2, -1)
    f = PhantomPolynomial((c,))
    for z in (ZERO, Phantom(5, 5), Phantom(-1, 3)):
        assert poly_eval(f, z) == c


def test_poly_eval_matches_ring_horner():
    rng = random.Random(20)
    for _ in range(500):
        coeffs = tuple(rand_phantom(rng) for _ in range(rng.randint(1, 6)))
        f = PhantomPolynomial(coeffs)
        z = rand_phantom(rng)
        # direct Horner with ring arithmetic
        acc = ZERO
        for c in reversed(coeffs):
            acc = acc * z + c
        got = poly_eval(f, z)
        scale = max(1.0, abs(acc.re), abs(acc.ph))
        assert abs(got.re - acc.re) <= 1e-12 * scale
        assert abs(got.ph - acc.ph) <= 1e-12 * scale


def test_poly_conjugate_coefficient():
    f = PhantomPolynomial((ZERO, Phantom(1, 2)))
    g = poly_conjugate(f)
    assert g.coefficients == (ZERO, Phantom(3, -2))


def test_real_polynomial_fixed_by_conjugation():
    f = PhantomPolynomial((ONE, Phantom(2, 0), Phantom(-3, 0)))
    assert poly_conjugate(f) == f


def test_conjugation_commutes_with_evaluation():
    rng = random.Random(21)
    for _ in range(500):
        coeffs = tuple(rand_phantom(rng) for _ in range(rng.randint(1, 5)))
        f = PhantomPolynomial(coeffs)
        z = rand_phantom(rng)
        assert_close(conjugate(poly_eval(f, z)),
                     poly_eval(poly_conjugate(f), conjugate(z)), tol=1e-12)


def test_derivative_of_cube():
    f = PhantomPolynomial((ZERO, ZERO, ZERO, ONE))  # z^3
    df = poly_derivative(f)
    assert_close(poly_eval(df, Phantom(1, 1)), Phantom(3, 9))


def test_derivative_of_constant_is_zero():
    assert poly_derivative(PhantomPolynomial((Phantom(4, 2),))).coefficients == ()


def test_derivative_matches_finite_differences():
    rng = random.Random(22)
    for _ in range(100):
        coeffs = tuple(rand_phantom(rng) for _ in range(rng.randint(2, 5)))
        f = PhantomPolynomial(coeffs)
        df = poly_derivative(f)
        t = rng.uniform(-1, 1)
        h = 1e-6
        z, zp, zm = Phantom(t, 0), Phantom(t + h, 0), Phantom(t - h, 0)
        fd = (poly_eval(f, zp) - poly_eval(f, zm)) * (1.0 / (2 * h))
        got = poly_eval(df, z)
        assert got.re == pytest.approx(fd.re, rel=1e-6, abs=1e-6)
        assert got.ph == pytest.approx(fd.ph, rel=1e-6, abs=1e-6)


# -- paths ------------------------------------------------------------------------


def test_real_line_path_point_and_tangent():
    gamma = Path(a=lambda t: t, b=lambda t: 0.0, t0=0.0, t1=3.0)
    assert_close(path_point(gamma, 2.0), Phantom(2, 0))
    tangent = path_tangent(gamma, 2.0)  # central differences
    assert tangent.re == pytest.approx(1.0, abs=1e-8)
    assert tangent.ph == pytest.approx(0.0, abs=1e-8)


def test_parabola_tangent():
    gamma = Path(a=lambda t: t, b=lambda t: t * t, t0=0.0, t1=2.0,
                 a_deriv=lambda t: 1.0, b_deriv=lambda t: 2.0 * t)
    assert_close(path_tangent(gamma, 1.0), Phantom(1, 2))


def test_out_of_domain():
    gamma = line_path(ZERO, ONE)
    with pytest.raises(OutOfDomain):
        path_point(gamma, 2.0)
    with pytest.raises(OutOfDomain):
        path_tangent(gamma, -0.5)


# -- path integrals ----------------------------------------------------------------


def test_constant_function_on_real_segment():
    gamma = line_path(ZERO, ONE)
    got = path_integral(lambda z: ONE, gamma)
    assert_close(got, Phantom(1, 0), tol=1e-10)


def test_unit_integrand_gives_endpoint_difference():
    gamma = line_path(ZERO, Phantom(1, 1))
    got = path_integral(lambda z: ONE, gamma)
    assert_close(got, Phantom(1, 1), tol=1e-10)


def test_linearity():
    rng = random.Random(23)
    gamma = Path(a=lambda t: t, b=lambda t: 0.3 * math.sin(t), t0=0.0, t1=2.0,
                 a_deriv=lambda t: 1.0, b_deriv=lambda t: 0.3 * math.cos(t))
    for _ in range(20):
        w = rand_phantom(rng)

        def f(z):
            return z * z

        def g(z):
            return z + Phantom(1, -1)

        lhs = path_integral(lambda z: f(z) + w * g(z), gamma)
        rhs = path_integral(f, gamma) + w * path_integral(g, gamma)
        assert lhs.re == pytest.approx(rhs.re, rel=1e-8, abs=1e-8)
        assert lhs.ph == pytest.approx(rhs.ph, rel=1e-8, abs=1e-8)


def test_reversal_negates_integral():
    gamma = Path(a=lambda t: t, b=lambda t: t * t, t0=0.0, t1=1.5,
                 a_deriv=lambda t: 1.0, b_deriv=lambda t: 2.0 * t)
    forward = path_integral(lambda z: z, gamma)
    backward = path_integral(lambda z: z, gamma.reversed())
    assert forward.re == pytest.approx(-backward.re, rel=1e-8, abs=1e-8)
    assert forward.ph == pytest.approx(-backward.ph, rel=1e-8, abs=1e-8)


def test_concatenation_adds_integrals():
    gamma = Path(a=lambda t: t, b=lambda t: math.cos(t), t0=0.0, t1=2.0,
                 a_deriv=lambda t: 1.0, b_deriv=lambda t: -math.sin(t))
    whole = path_integral(lambda z: z * z, gamma)
    first = path_integral(lambda z: z * z, gamma, sub=(0.0, 0.8))
    second = path_integral(lambda z: z * z, gamma, sub=(0.8, 2.0))
    total = first + second
    assert whole.re == pytest.approx(total.re, rel=1e-8, abs=1e-8)
    assert whole.ph == pytest.approx(total.ph, rel=1e-8, abs=1e-8)


def test_fundamental_theorem_oracle():
    # integral of z^2 along any path equals the antiderivative difference
    rng = random.Random(24)
    gamma = Path(a=lambda t: t + 0.5 * t * t, b=lambda t: 0.2 * t,
                 t0=0.0, t1=1.0,
                 a_deriv=lambda t: 1.0 + t, b_deriv=lambda t: 0.2)
    for n in range(1, 5):
        got = path_integral(lambda z: z ** n, gamma)
        z0 = path_point(gamma, gamma.t0)
        z1 = path_point(gamma, gamma.t1)
        expected = (z1 ** (n + 1) - z0 ** (n + 1)) * (1.0 / (n + 1))
        assert got.re == pytest.approx(expected.re, rel=1e-8, abs=1e-8)
        assert got.ph == pytest.approx(expected.ph, rel=1e-8, abs=1e-8)


def test_quadrature_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=-1.0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)
