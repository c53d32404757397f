import numpy as np
import pytest

from bhvqe.ansatz import AnsatzConfig, ansatz_state, expectation
from bhvqe.errors import NumericError, ParameterError
from bhvqe.linalg import eig_hermitian
from bhvqe.models import ModelSpec
from bhvqe.vqe import MinimizeSettings, gradient, minimize, run_vqe
from conftest import random_hermitian

SZ = np.diag([1.0, -1.0]).astype(complex)


def test_gradient_closed_form_cosine():
    cfg = AnsatzConfig(qubits=1, depth=0)
    # E(theta) = cos(theta) for Ry on |0> measured in Z
    assert gradient(np.array([0.0]), cfg, SZ)[0] == pytest.approx(0.0, abs=1e-12)
    assert gradient(np.array([np.pi / 2]), cfg, SZ)[0] == pytest.approx(-1.0, abs=1e-12)


@pytest.mark.parametrize("qubits", [2, 4])
def test_gradient_matches_finite_differences(qubits):
    rng = np.random.default_rng(qubits * 100)
    cfg = AnsatzConfig(qubits=qubits, depth=2)
    h = 1e-5
    for _ in range(50):
        A = random_hermitian(rng, 2**qubits)
        theta = rng.uniform(-np.pi, np.pi, cfg.num_parameters)
        g = gradient(theta, cfg, A)
        for k in range(cfg.num_parameters):
            tp = theta.copy()
            tp[k] += h
            tm = theta.copy()
            tm[k] -= h
            fd = (expectation(ansatz_state(tp, cfg), A)
                  - expectation(ansatz_state(tm, cfg), A)) / (2 * h)
            assert abs(g[k] - fd) < 1e-6


def test_gradient_length_checked():
    cfg = AnsatzConfig(qubits=2, depth=1)
    with pytest.raises(ParameterError):
        gradient(np.zeros(3), cfg, np.eye(4))


def test_minimize_cosine():
    value, theta, history = minimize(
        lambda t: float(np.cos(t[0])),
        lambda t: np.array([-np.sin(t[0])]),
        np.array([1.0]),
    )
    assert value == pytest.approx(-1.0, abs=1e-8)
    assert np.cos(theta[0]) == pytest.approx(-1.0, abs=1e-8)  # theta at pi mod 2*pi
    assert history[0][1] == pytest.approx(np.cos(1.0))


def test_minimize_quadratic_fast():
    c = np.array([0.3, -1.2, 2.0])
    value, theta, history = minimize(
        lambda t: float(np.sum((t - c) ** 2)),
        lambda t: 2 * (t - c),
        np.zeros(3),
        MinimizeSettings(max_iterations=50),
    )
    assert np.max(np.abs(theta - c)) < 1e-8
    assert value < 1e-8


def test_minimize_simplex_fallback():
    c = np.array([1.0, -0.5])
    value, theta, _ = minimize(
        lambda t: float(np.sum((t - c) ** 2)),
        None,
        np.zeros(2),
        MinimizeSettings(method="simplex", max_iterations=500, ftol=1e-12),
    )
    assert np.max(np.abs(theta - c)) < 1e-4


def test_minimize_rejects_non_finite():
    with pytest.raises(NumericError):
        minimize(lambda t: float("nan"), lambda t: t, np.zeros(2))
    with pytest.raises(NumericError):
        minimize(lambda t: 0.0, lambda t: t, np.array([np.inf]))


def test_history_best_and_monotone_envelope():
    value, _, history = minimize(
        lambda t: float(np.cos(t[0])),
        lambda t: np.array([-np.sin(t[0])]),
        np.array([2.0]),
    )
    objectives = [v for _, v in history]
    assert value == pytest.approx(min(objectives), abs=1e-12)
    running = np.minimum.accumulate(objectives)
    assert np.all(np.diff(running) <= 0 + 1e-15)
    assert [i for i, _ in history] == list(range(len(history)))


def test_run_vqe_btz_j5(pairs):
    spec = ModelSpec("btz", J=5)
    cfg = AnsatzConfig(qubits=4, depth=3)
    result = run_vqe(spec, "pos", cfg, seed=42, restarts=5)
    assert result.unscaled_mass == pytest.approx(5.00359995, abs=1e-4)
    assert result.best_value >= 5.00359995 - 1e-6  # variational bound
    assert result.converged


def test_run_vqe_deterministic():
    spec = ModelSpec("string2d", Q=1)
    cfg = AnsatzConfig(qubits=4, depth=3)
    a = run_vqe(spec, "pos", cfg, seed=7, restarts=2)
    b = run_vqe(spec, "pos", cfg, seed=7, restarts=2)
    assert a.best_value == b.best_value
    assert a.history == b.history
    assert np.array_equal(a.best_theta, b.best_theta)
    c = run_vqe(spec, "pos", cfg, seed=8, restarts=2)
    assert c.history != a.history


def test_run_vqe_variational_bound_whole_history(pairs):
    spec = ModelSpec("rn", Q=2)
    cfg = AnsatzConfig(qubits=4, depth=3)
    result = run_vqe(spec, "pos", cfg, seed=3, restarts=2)
    from bhvqe.models import build_mass

    exact = eig_hermitian(build_mass(spec, pairs["pos"]).matrix).eigenvalues[0]
    for _, value in result.history:
        assert value >= exact - 1e-9


def test_vqe_result_serialization():
    spec = ModelSpec("string2d", Q=1)
    cfg = AnsatzConfig(qubits=4, depth=3)
    result = run_vqe(spec, "pos", cfg, seed=7, restarts=1)
    import json

    payload = json.loads(result.to_json(history_csv_path="h.csv"))
    assert payload["model"] == "string2d Q=1"
    assert payload["history_csv_path"] == "h.csv"
    csv_text = result.history_csv()
    assert csv_text.startswith("evaluation_index,objective\n")
    assert len(csv_text.strip().splitlines()) == len(result.history) + 1
