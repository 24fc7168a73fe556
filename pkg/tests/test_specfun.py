import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from phinfo.quadrature import integrate_halfline
from phinfo.specfun import (
    bell_polynomial,
    laguerre,
    laguerre_deriv,
    lauricella_fa_symmetric,
    orthonormal_laguerre_coeffs,
    orthonormal_power_coeffs_bell,
    orthonormal_power_moment,
    pochhammer,
    poly_power,
    theta0,
)


def test_laguerre_matches_library():
    x = np.linspace(0.0, 50.0, 101)
    for n in range(12):
        for alpha in (0.5, 2.25, 11.0):
            ref = eval_genlaguerre(n, alpha, x)
            got = laguerre(n, alpha, x)
            assert np.allclose(got, ref, rtol=1e-12, atol=1e-10)


def test_laguerre_scalar_and_validation():
    assert laguerre(0, 1.0, 3.0) == 1.0
    assert isinstance(laguerre(3, 1.0, 2.0), float)
    with pytest.raises(ValueError):
        laguerre(-1, 1.0, 0.0)


def test_laguerre_deriv_identity():
    x = np.linspace(0.1, 20.0, 40)
    for n in (0, 1, 4, 8):
        h = 1e-6
        numeric = (laguerre(n, 1.75, x + h) - laguerre(n, 1.75, x - h)) / (2 * h)
        exact = laguerre_deriv(n, 1.75, x)
        assert np.allclose(numeric, exact, rtol=1e-6, atol=1e-6)


def test_pochhammer_values():
    assert pochhammer(3.0, 0) == 1.0
    assert math.isclose(pochhammer(2.5, 3), 2.5 * 3.5 * 4.5)
    assert pochhammer(-3.0, 2) == 6.0
    assert pochhammer(-3.0, 5) == 0.0
    assert math.isclose(pochhammer(-2.5, 2), (-2.5) * (-1.5))
    with pytest.raises(ValueError):
        pochhammer(1.0, -1)


def test_orthonormal_coeffs_are_orthonormal():
    alpha = 2.5

    def poly(c, t):
        return sum(ck * t**k for k, ck in enumerate(c))

    for n in range(4):
        for m in range(n + 1):
            cn = orthonormal_laguerre_coeffs(n, alpha)
            cm = orthonormal_laguerre_coeffs(m, alpha)
            # exp(-t) decay is linear, not Gaussian; substitute t = u^2.
            res = integrate_halfline(
                lambda u: 2.0 * u * np.where(u > 0, u, 0.0) ** (2 * alpha)
                * np.exp(-(u**2)) * poly(cn, u**2) * poly(cm, u**2),
                scale=1.0,
                growth=4.0 * n + alpha,
            )
            expected = 1.0 if n == m else 0.0
            assert abs(res.value - expected) < 1e-9


def test_poly_power_matches_numpy():
    c = np.array([1.0, -2.0, 0.5])
    for s in (1, 2, 3, 5):
        ref = np.polynomial.polynomial.polypow(c, s)
        assert np.allclose(poly_power(c, s), ref)
    with pytest.raises(ValueError):
        poly_power(c, 0)


def test_bell_polynomial_known_values():
    a1, a2, a3 = 2.0, -3.0, 5.0
    assert bell_polynomial(1, 1, [a1]) == a1
    assert math.isclose(bell_polynomial(3, 2, [a1, a2]), 3 * a1 * a2)
    assert math.isclose(bell_polynomial(4, 2, [a1, a2, a3]), 4 * a1 * a3 + 3 * a2**2)
    assert math.isclose(bell_polynomial(4, 4, [a1]), a1**4)
    with pytest.raises(ValueError):
        bell_polynomial(2, 3, [a1])
    with pytest.raises(ValueError):
        bell_polynomial(4, 1, [a1])


def test_bell_route_equals_convolution_route():
    for n in range(5):
        for power in (2, 3, 4):
            via_bell = orthonormal_power_coeffs_bell(n, 1.75, power)
            via_conv = poly_power(orthonormal_laguerre_coeffs(n, 1.75), power)
            assert np.allclose(via_bell, via_conv, rtol=1e-12, atol=1e-12)


def _naive_lauricella(a, n, c, s, k, t):
    """Direct nested sum over all multi-indices (small cases only)."""
    total = 0.0
    indices = [0] * s

    def rec(pos, prod, big_j):
        nonlocal total
        if pos == s:
            for i in range(k + 1):
                inner = pochhammer(-float(k), i) / math.factorial(i) ** 2
                total += pochhammer(a, big_j + i) * prod * inner
            return
        for j in range(n + 1):
            term = pochhammer(-float(n), j) / (pochhammer(c, j) * math.factorial(j))
            rec(pos + 1, prod * term * t**j, big_j + j)

    rec(0, 1.0, 0)
    return total


def test_lauricella_trivial_and_naive():
    assert lauricella_fa_symmetric(2.0, 0, 1.5, 2, 0, 0.5) == 1.0
    for a, n, c, s, k, t in [
        (4.25, 2, 3.5, 2, 0, 0.3),
        (4.25, 1, 3.5, 4, 0, 0.25),
        (2.5, 2, 2.0, 2, 2, 0.4),
        (6.0, 3, 4.5, 3, 1, 0.2),
    ]:
        fast = lauricella_fa_symmetric(a, n, c, s, k, t)
        naive = _naive_lauricella(a, n, c, s, k, t)
        assert math.isclose(fast, naive, rel_tol=1e-10)
    with pytest.raises(ValueError):
        lauricella_fa_symmetric(2.0, -1, 1.5, 2, 0, 0.5)


def test_theta0_ground_state_is_gamma_function():
    # With n = 0 the linearization collapses to a plain gamma factor.
    for q in (1, 2, 3):
        for g in (2.0, 3.0, 7.5):
            assert math.isclose(theta0(q, 0, g), math.gamma(q * g + 1.5), rel_tol=1e-12)
    with pytest.raises(ValueError):
        theta0(0, 1, 3.0)
    with pytest.raises(ValueError):
        theta0(2.5, 1, 3.0)


def test_power_moment_orthonormality():
    # s=2, rate=1, mu=alpha is exactly the orthonormality integral.
    for n in (0, 1, 3, 6):
        moment = orthonormal_power_moment(n, 2.25, 2, 2.25, 1.0)
        assert abs(float(moment) - 1.0) < 1e-12


def test_power_moment_against_quadrature():
    n, alpha, s, mu, rate = 2, 1.5, 4, 3.25, 4.0
    scale = 1.0 / math.sqrt(rate)

    def integrand(t):
        c = orthonormal_laguerre_coeffs(n, alpha)
        poly = sum(ck * t**k for k, ck in enumerate(c))
        return np.where(t > 0, t, 0.0) ** mu * np.exp(-rate * t) * poly**s

    # exp(-rate*t) decay is linear, not Gaussian; substitute t = u^2.
    ref = integrate_halfline(
        lambda u: 2.0 * u * integrand(u**2), scale=scale, growth=4.0 * n
    )
    got = float(orthonormal_power_moment(n, alpha, s, mu, rate))
    assert math.isclose(got, ref.value, rel_tol=1e-9)
    with pytest.raises(ValueError):
        orthonormal_power_moment(n, alpha, 0, mu, rate)
    with pytest.raises(ValueError):
        orthonormal_power_moment(n, alpha, 2, mu, 0.0)
