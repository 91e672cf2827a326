import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import brentq

from isingnet import ConstraintUndefinedError, DomainError, Rapidity, Regime, ising_partner_theta
from isingnet.algebra import arccosh_from_excess, det2, mat_apply, mat_mul, node_matrix

PHI_C = math.acosh(math.sqrt(2))
angles = st.floats(-3, 3, allow_nan=False)


def test_node_matrix_zero_is_identity():
    np.testing.assert_array_equal(node_matrix(0.0), np.eye(2))


def test_node_matrix_at_critical_angle():
    expected = np.array([[math.sqrt(2), 1j], [-1j, math.sqrt(2)]])
    np.testing.assert_allclose(node_matrix(PHI_C), expected, atol=1e-15)


def test_node_matrix_su2_is_real_rotation():
    m = node_matrix(Rapidity.su2(math.pi / 4))
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(m, [[r, -r], [r, r]], atol=1e-16)
    assert np.all(m.imag == 0.0)


def test_node_matrix_rejects_non_finite():
    with pytest.raises(DomainError):
        node_matrix(float("nan"))
    with pytest.raises(DomainError):
        node_matrix(complex(0, float("inf")))


def test_entry_structure_by_regime(rng):
    for a in rng.uniform(-2, 2, 20):
        m = node_matrix(Rapidity.su11(a))
        assert m[0, 0].imag == 0 and m[1, 1].imag == 0
        assert m[0, 1].real == 0 and m[1, 0].real == 0
        assert np.all(node_matrix(Rapidity.su2(a)).imag == 0)


def test_unit_determinant_many_angles(rng):
    for a in rng.uniform(-3, 3, 1000):
        assert abs(det2(node_matrix(a)) - 1) < 1e-10
        assert abs(det2(node_matrix(1j * a)) - 1) < 1e-10


@given(angles, angles)
def test_one_parameter_group(a, b):
    for za, zb in ((a, b), (1j * a, 1j * b)):
        prod = mat_mul(node_matrix(za), node_matrix(zb))
        np.testing.assert_allclose(prod, node_matrix(za + zb), atol=1e-10 * max(1, np.abs(prod).max()))


@given(angles)
def test_negated_angle_inverts(a):
    np.testing.assert_allclose(mat_mul(node_matrix(a), node_matrix(-a)), np.eye(2), atol=1e-10 * math.cosh(a) ** 2)


def test_mat_mul_identity_and_apply(rng):
    X = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    np.testing.assert_allclose(mat_mul(np.eye(2), X), X)
    v = (1 + 2j, -0.5j)
    np.testing.assert_allclose(mat_apply(X, v), X @ np.array(v))


def test_determinant_multiplicative(rng):
    X = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    Y = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    assert abs(det2(mat_mul(X, Y)) - det2(X) * det2(Y)) < 1e-12


def test_rapidity_regime_tag():
    assert Rapidity.su2(0.3).angle == 0.3
    with pytest.raises(DomainError):
        Rapidity(0.5 + 1e-9j, Regime.SU11)
    with pytest.raises(DomainError):
        Rapidity(1e-9 + 0.5j, Regime.SU2)
    Rapidity(0.5 + 1e-13j, Regime.SU11)


def test_partner_theta_self_dual_at_critical():
    theta = ising_partner_theta(PHI_C).value.real
    assert theta == pytest.approx(PHI_C, abs=1e-14)


def test_partner_theta_large_phi():
    theta = ising_partner_theta(20.0).value.real
    assert 0 < theta < 10 * math.exp(-20)


def test_partner_theta_matches_root_solve():
    root = brentq(lambda t: 1 / math.tanh(t) - math.cosh(1.0), 0.1, 3.0, xtol=1e-15)
    assert ising_partner_theta(1.0).value.real == pytest.approx(root, abs=1e-14)
    assert ising_partner_theta(1.0).value.real == pytest.approx(0.7719368329053047, abs=1e-14)


def test_partner_theta_fixed_point_only_at_critical(rng):
    # the constraint is symmetric (sinh theta sinh phi = 1), so the map is an
    # involution whose single fixed point is phi_c
    for phi in rng.uniform(0.05, 4.0, 200):
        theta = ising_partner_theta(phi).value.real
        assert math.sinh(theta) * math.sinh(phi) == pytest.approx(1.0, rel=1e-12)
        assert ising_partner_theta(theta).value.real == pytest.approx(phi, rel=1e-12)
        if abs(phi - PHI_C) > 1e-3:
            assert abs(theta - phi) > 1e-3


@pytest.mark.parametrize("bad", [0.0, -1.0, Rapidity.su2(0.3), 0.3j])
def test_partner_theta_undefined(bad):
    with pytest.raises(ConstraintUndefinedError):
        ising_partner_theta(bad)


@pytest.mark.parametrize(
    "z", [1.0, 1 + 1e-12, 3.7, 0.3, complex(0.3, -0.0), -0.99, -1.0, -4.0, complex(-4.0, -0.0), 2 + 1j, -3 - 0.5j]
)
def test_arccosh_branch(z):
    g = arccosh_from_excess(z - 1)
    z = z + 0j  # drop a signed zero: the principal branch is taken from above
    ref = cmath.log(z + cmath.sqrt(z - 1) * cmath.sqrt(z + 1))
    assert abs(g - ref) < 1e-9 * max(1, abs(ref))
    assert g.real >= 0
    assert abs(cmath.cosh(g) - z) < 1e-10 * max(1, abs(z))


def test_arccosh_small_excess_keeps_precision():
    assert arccosh_from_excess(2e-20).real == pytest.approx(2e-10, rel=1e-12)
