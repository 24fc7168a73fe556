import math

import numpy as np
import pytest

from phinfo.moldata import builtin_molecules
from phinfo.states import (
    Mode,
    Space,
    density,
    make_state,
    momentum_density,
    position_density,
    potential,
    radial_norm,
)

MOLS = builtin_molecules()


def test_potential_shape():
    na2 = MOLS["Na2"]
    assert potential(na2, na2.r_e) == 0.0
    assert potential(na2, 2.0) > 0.0
    assert potential(na2, 5.0) > 0.0
    with pytest.raises(ValueError):
        potential(na2, 0.0)
    with pytest.raises(ValueError):
        potential(na2, -1.0)


def test_na2_derived_parameters():
    s = make_state(MOLS["Na2"], 0, 0)
    assert math.isclose(s.gamma_ell, 3.2957776277298563, rel_tol=1e-14)
    assert math.isclose(s.lam, 0.19844971207973397, rel_tol=1e-14)
    assert s.alpha == s.gamma_ell + 0.5


def test_gamma_formula_for_angular_momentum():
    mol = MOLS["Cl2"]
    for ell in (0, 1, 5, 20):
        s = make_state(mol, 0, ell)
        expected = 0.5 * (-1.0 + math.sqrt((2 * ell + 1) ** 2 + 8 * mol.d_e * mol.r_e**2))
        assert math.isclose(s.gamma_ell, expected, rel_tol=1e-14)


def test_quantum_number_validation():
    with pytest.raises(ValueError):
        make_state(MOLS["Na2"], -1, 0)
    with pytest.raises(ValueError):
        make_state(MOLS["Na2"], 0, -2)


def test_position_norm_closed_form():
    for name in ("Na2", "NO+"):
        for n in (0, 2, 7):
            s = make_state(MOLS[name], n, 0)
            expected = 4.0 * math.pi * 2.0 ** (-(2 * s.gamma_ell + 3) / 4.0)
            assert math.isclose(s.pos_norm, expected, rel_tol=1e-13)
            assert math.isclose(radial_norm(s, Space.POSITION), expected, rel_tol=1e-10)


def test_momentum_norm_matches_quadrature():
    for name in ("Na2", "NO+"):
        for n in (0, 1, 5):
            s = make_state(MOLS[name], n, 0)
            assert math.isclose(radial_norm(s, Space.MOMENTUM), s.mom_norm, rel_tol=1e-9)


def test_renormalized_mode_unit_norms():
    for name in ("Cl2", "O2+"):
        for n in (0, 3):
            s = make_state(MOLS[name], n, 0, Mode.RENORMALIZED)
            assert s.pos_norm == 1.0
            assert s.mom_norm == 1.0
            for space in Space:
                assert abs(radial_norm(s, space) - 1.0) < 1e-10


def test_mode_rescale_is_consistent():
    paper = make_state(MOLS["Na2"], 2, 0)
    renorm = make_state(MOLS["Na2"], 2, 0, Mode.RENORMALIZED)
    x = np.array([0.5, 1.0, 2.0]) / math.sqrt(paper.lam)
    for space, rescale in ((Space.POSITION, renorm.pos_rescale),
                           (Space.MOMENTUM, renorm.mom_rescale)):
        a = density(paper, space).value(x)
        b = density(renorm, space).value(x)
        assert np.allclose(b, a * rescale, rtol=1e-12)


def test_density_nonnegative_and_zero_at_origin():
    s = make_state(MOLS["Cl2"], 3, 1)
    assert position_density(s, 0.0) == 0.0
    assert momentum_density(s, 0.0) == 0.0
    x = np.linspace(0.0, 10.0, 200)
    assert np.all(density(s, Space.POSITION).value(x) >= 0.0)
    assert np.all(density(s, Space.MOMENTUM).value(x) >= 0.0)


def test_log_value_consistency():
    s = make_state(MOLS["O2+"], 4, 0)
    rho = density(s, Space.POSITION)
    x = np.array([0.3, 0.8, 1.1, 1.5])
    assert np.allclose(np.exp(rho.log_value(x)), rho.value(x), rtol=1e-12)


def test_derivative_against_finite_differences():
    s = make_state(MOLS["Na2"], 3, 1)
    for space in Space:
        rho = density(s, space)
        h = 1e-6 * rho.gaussian_scale()
        for x in rho.gaussian_scale() * np.array([0.4, 1.0, 1.8, 2.5]):
            numeric = (rho.value(x + h) - rho.value(x - h)) / (2 * h)
            exact = rho.derivative(x)
            assert math.isclose(numeric, exact, rel_tol=1e-5, abs_tol=1e-12)


def test_gradient_term_factorization():
    # Away from nodes (d rho/dx)^2 / rho must match the factored form.
    s = make_state(MOLS["NO+"], 2, 0)
    for space in Space:
        rho = density(s, space)
        for x in rho.gaussian_scale() * np.array([0.37, 1.13, 2.41]):
            val = rho.value(x)
            if val < 1e-12:
                continue
            direct = rho.derivative(x) ** 2 / val
            assert math.isclose(rho.gradient_term(x), direct, rel_tol=1e-9)
