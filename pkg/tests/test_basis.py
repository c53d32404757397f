import numpy as np
import pytest

from bhvqe.basis import osc_pair, pos_pair, sylvester_unitary, variable_pair
from bhvqe.errors import DimensionError

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.diag([1.0, -1.0]).astype(complex)


def test_osc_n2_matches_paulis():
    Q, P = osc_pair(2)
    assert np.allclose(Q, SX / np.sqrt(2))
    assert np.allclose(P, SY / np.sqrt(2))
    assert np.allclose(Q @ P - P @ Q, 1j * SZ)


def test_osc_n4_entries():
    Q, P = osc_pair(4)
    off = np.array([1.0, np.sqrt(2), np.sqrt(3)]) / np.sqrt(2)
    assert np.allclose(np.diag(Q, 1), off)
    assert np.allclose(np.diag(Q), 0)
    assert np.allclose(np.diag(P, 1), -1j * off)
    assert np.allclose(np.diag(P, -1), 1j * off)


@pytest.mark.parametrize("n", [2, 4, 8, 16])
def test_osc_truncated_commutator(n):
    Q, P = osc_pair(n)
    comm = Q @ P - P @ Q
    expected = 1j * np.eye(n)
    expected[n - 1, n - 1] = 1j * (1 - n)
    assert np.max(np.abs(comm - expected)) < 1e-12


def test_pos_n2_grid():
    Q, P = pos_pair(2)
    x = np.sqrt(2 * np.pi / 8)
    assert np.allclose(np.diag(Q).real, [-x, x])
    assert abs(x - 0.886227) < 1e-6
    assert np.max(np.abs(P - P.conj().T)) < 1e-12


@pytest.mark.parametrize("n", [2, 4, 8, 16])
def test_sylvester_unitary(n):
    F = sylvester_unitary(n)
    assert np.max(np.abs(F.conj().T @ F - np.eye(n))) < 1e-12


def test_pos_momentum_isospectral():
    Q, P = pos_pair(4)
    wq = np.linalg.eigvalsh(Q)
    wp = np.linalg.eigvalsh(P)
    assert np.allclose(wq, wp, atol=1e-12)


@pytest.mark.parametrize("basis", ["osc", "pos"])
def test_traceless(basis):
    Q, P = (osc_pair if basis == "osc" else pos_pair)(8)
    assert abs(np.trace(Q)) < 1e-12
    assert abs(np.trace(P)) < 1e-12


@pytest.mark.parametrize("basis", ["osc", "pos"])
def test_variable_pair_structure(basis):
    pair = variable_pair(4, basis)
    for A in (pair.q1, pair.q2, pair.p1, pair.p2):
        assert A.shape == (16, 16)
        assert np.max(np.abs(A - A.conj().T)) < 1e-10
    # different tensor factors commute exactly
    for A, B in [(pair.q1, pair.q2), (pair.p1, pair.p2),
                 (pair.q1, pair.p2), (pair.q2, pair.p1)]:
        assert np.max(np.abs(A @ B - B @ A)) == 0.0


def test_variable_pair_q2_oscillator():
    pair = variable_pair(2, "osc")
    assert np.allclose(pair.q1, np.kron(SX / np.sqrt(2), np.eye(2)))


def test_position_difference_diagonal_zeros():
    pair = variable_pair(4, "pos")
    d = pair.q1 - pair.q2
    assert np.allclose(d, np.diag(np.diag(d)))
    grid = np.sqrt(2 * np.pi / 16) * (2 * np.arange(1, 5) - 5)
    expected = np.subtract.outer(grid, grid).ravel()
    assert np.allclose(np.diag(d).real, expected)
    assert int(np.sum(np.abs(np.diag(d)) < 1e-14)) == 4


def test_odd_qubits_rejected():
    with pytest.raises(DimensionError):
        variable_pair(3, "osc")
    with pytest.raises(DimensionError):
        osc_pair(1)
    with pytest.raises(DimensionError):
        pos_pair(1)
