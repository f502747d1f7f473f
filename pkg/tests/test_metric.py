import numpy as np
import pytest

from lctkit import (
    EmptySignature,
    Metric,
    Signature,
    coupling_constant_si,
    metric_matrix,
    omega_matrix,
)
from lctkit.metric import GRAVITATIONAL_CONSTANT, SPEED_OF_LIGHT


def all_signatures(max_dim=8):
    return [
        Signature(p, m)
        for p in range(max_dim + 1)
        for m in range(max_dim + 1)
        if 1 <= p + m <= max_dim
    ]


def test_signature_validation():
    assert Signature(1, 3).dim == 4
    with pytest.raises(EmptySignature):
        Signature(0, 0)
    with pytest.raises(ValueError):
        Signature(-1, 2)


def test_metric_examples():
    assert np.array_equal(metric_matrix(Signature(1, 3)).matrix, np.diag([1, -1, -1, -1]))
    assert np.array_equal(metric_matrix(Signature(1, 0)).matrix, [[1.0]])
    assert np.array_equal(metric_matrix(Signature(2, 1)).matrix, np.diag([1, 1, -1]))


def test_metric_squares_to_identity_exactly():
    for sig in all_signatures():
        eta = metric_matrix(sig).matrix
        assert np.array_equal(eta @ eta, np.eye(sig.dim))


def test_omega_examples():
    omega = omega_matrix(Metric(Signature(1, 0)))
    assert np.array_equal(omega, [[0, 1], [-1, 0]])

    omega = omega_matrix(Metric(Signature(1, 1)))
    assert omega.shape == (4, 4)
    assert omega[0, 2] == 1 and omega[1, 3] == -1
    assert omega[2, 0] == -1 and omega[3, 1] == 1


def test_omega_antisymmetric_and_squares_to_minus_identity():
    for sig in all_signatures():
        omega = omega_matrix(Metric(sig))
        assert np.array_equal(omega.T, -omega)
        assert np.array_equal(omega @ omega, -np.eye(2 * sig.dim))


def test_coupling_constant_value():
    kappa = coupling_constant_si()
    assert abs(kappa - 4.037e35) / 4.037e35 < 1e-3
    rough = (2.998e8) ** 3 / 6.674e-11
    assert abs(rough - 4.037e35) / 4.037e35 < 1e-3


def test_coupling_equals_planck_mass_c_over_planck_length():
    hbar = 1.054571817e-34
    m_p = np.sqrt(hbar * SPEED_OF_LIGHT / GRAVITATIONAL_CONSTANT)
    l_p = np.sqrt(hbar * GRAVITATIONAL_CONSTANT / SPEED_OF_LIGHT**3)
    assert m_p * SPEED_OF_LIGHT / l_p == pytest.approx(coupling_constant_si(), rel=1e-12)


def test_signature_json_round_trip():
    sig = Signature(2, 3)
    assert Signature.from_json_dict(sig.to_json_dict()) == sig
