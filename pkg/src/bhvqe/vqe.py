"""Variational minimization of ansatz expectation values.

The optimizer is a deterministic quasi-Newton descent: BFGS inverse-Hessian
updates on the parameter-shift gradient with an Armijo backtracking line
search, stopping once the decrease between accepted steps falls below
``ftol`` or ``max_iterations`` is reached.  A derivative-free Nelder-Mead
simplex is available as a fallback.  Every objective evaluation (including
line-search probes and gradient shifts) is recorded in the convergence
history.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .ansatz import AnsatzConfig, ansatz_state, expectation
from .basis import variable_pair
from .errors import NumericError, ParameterError
from .models import ModelSpec, build_operator, MASS

PARAMETER_SHIFT = np.pi / 2


@dataclass(frozen=True)
class MinimizeSettings:
    max_iterations: int = 500
    ftol: float = 1e-9
    method: str = "bfgs"  # or "simplex"
    armijo_c: float = 1e-4
    backtrack: float = 0.5
    max_backtracks: int = 40


@dataclass
class VqeResult:
    best_value: float
    best_theta: np.ndarray
    history: list[tuple[int, float]]
    restarts_used: int
    converged: bool
    model: str = ""
    basis: str = ""
    qubits: int = 0
    depth: int = 0
    seed: int = 0
    operator_kind: str = MASS
    unscaled_mass: float | None = None

    def to_json(self, history_csv_path: str | None = None) -> str:
        payload = {
            "model": self.model,
            "basis": self.basis,
            "qubits": self.qubits,
            "depth": self.depth,
            "seed": self.seed,
            "restarts": self.restarts_used,
            "operator": self.operator_kind,
            "best_value": self.best_value,
            "unscaled_mass": self.unscaled_mass,
            "converged": self.converged,
            "best_theta": [float(t) for t in self.best_theta],
            "history_csv_path": history_csv_path,
        }
        return json.dumps(payload, indent=2)

    def history_csv(self) -> str:
        lines = ["evaluation_index,objective"]
        lines += [f"{i},{v!r}" for i, v in self.history]
        return "\n".join(lines) + "\n"


def gradient(theta: np.ndarray, cfg: AnsatzConfig, operator: np.ndarray) -> np.ndarray:
    """Parameter-shift gradient, exact for Ry-generated circuits."""
    theta = np.asarray(theta, dtype=float)
    if theta.size != cfg.num_parameters:
        raise ParameterError(f"expected {cfg.num_parameters} angles, got {theta.size}")

    def f(t):
        return expectation(ansatz_state(t, cfg), operator)

    g = np.zeros_like(theta)
    for k in range(theta.size):
        tp = theta.copy()
        tp[k] += PARAMETER_SHIFT
        tm = theta.copy()
        tm[k] -= PARAMETER_SHIFT
        g[k] = 0.5 * (f(tp) - f(tm))
    return g


class _Recorder:
    """Wraps an objective, recording every evaluation and the running best."""

    def __init__(self, fn):
        self.fn = fn
        self.history: list[tuple[int, float]] = []
        self.best = np.inf
        self.best_x = None

    def __call__(self, x):
        val = float(self.fn(x))
        if not np.isfinite(val):
            raise NumericError(f"objective returned non-finite value {val}")
        self.history.append((len(self.history), val))
        if val < self.best:
            self.best = val
            self.best_x = np.array(x, dtype=float)
        return val


def _minimize_bfgs(f, grad, theta0, settings: MinimizeSettings):
    n = theta0.size
    theta = theta0.copy()
    fval = f(theta)
    g = grad(theta)
    Hinv = np.eye(n)
    converged = False
    for _ in range(settings.max_iterations):
        p = -(Hinv @ g)
        gp = float(np.dot(g, p))
        if gp >= 0:  # lost positive-definiteness; restart on steepest descent
            Hinv = np.eye(n)
            p = -g
            gp = float(np.dot(g, p))
            if gp >= 0:  # zero gradient
                converged = True
                break
        alpha = 1.0
        f_new = None
        for _ in range(settings.max_backtracks):
            cand = f(theta + alpha * p)
            if cand <= fval + settings.armijo_c * alpha * gp:
                f_new = cand
                break
            alpha *= settings.backtrack
        if f_new is None:  # line search failed; give up on this descent path
            converged = True
            break
        theta_new = theta + alpha * p
        g_new = grad(theta_new)
        s = theta_new - theta
        y = g_new - g
        sy = float(np.dot(s, y))
        if sy > 1e-12:
            rho = 1.0 / sy
            eye = np.eye(n)
            Hinv = (eye - rho * np.outer(s, y)) @ Hinv @ (eye - rho * np.outer(y, s))
            Hinv += rho * np.outer(s, s)
        decrease = fval - f_new
        theta, g, fval = theta_new, g_new, f_new
        if 0 <= decrease < settings.ftol:
            converged = True
            break
    return fval, theta, converged


def _minimize_simplex(f, theta0, settings: MinimizeSettings):
    """Nelder-Mead with standard coefficients; derivative-free fallback."""
    n = theta0.size
    step = 0.5
    simplex = [theta0.copy()]
    for k in range(n):
        v = theta0.copy()
        v[k] += step
        simplex.append(v)
    fvals = [f(v) for v in simplex]
    converged = False
    for _ in range(settings.max_iterations * max(n, 1)):
        order = np.argsort(fvals)
        simplex = [simplex[i] for i in order]
        fvals = [fvals[i] for i in order]
        if fvals[-1] - fvals[0] < settings.ftol:
            converged = True
            break
        centroid = np.mean(simplex[:-1], axis=0)
        worst = simplex[-1]
        refl = centroid + (centroid - worst)
        f_refl = f(refl)
        if f_refl < fvals[0]:
            expd = centroid + 2.0 * (centroid - worst)
            f_expd = f(expd)
            if f_expd < f_refl:
                simplex[-1], fvals[-1] = expd, f_expd
            else:
                simplex[-1], fvals[-1] = refl, f_refl
        elif f_refl < fvals[-2]:
            simplex[-1], fvals[-1] = refl, f_refl
        else:
            contr = centroid + 0.5 * (worst - centroid)
            f_contr = f(contr)
            if f_contr < fvals[-1]:
                simplex[-1], fvals[-1] = contr, f_contr
            else:  # shrink toward the best vertex
                for k in range(1, n + 1):
                    simplex[k] = simplex[0] + 0.5 * (simplex[k] - simplex[0])
                    fvals[k] = f(simplex[k])
    best = int(np.argmin(fvals))
    return fvals[best], simplex[best], converged


def _minimize_full(objective, grad, theta0, settings: MinimizeSettings):
    theta0 = np.asarray(theta0, dtype=float).ravel()
    if not np.all(np.isfinite(theta0)):
        raise NumericError("initial point is not finite")
    rec = _Recorder(objective)
    if settings.method == "bfgs":
        value, theta, converged = _minimize_bfgs(rec, grad, theta0, settings)
    elif settings.method == "simplex":
        value, theta, converged = _minimize_simplex(rec, theta0, settings)
    else:
        raise ValueError(f"unknown method {settings.method!r}")
    # the recorder may have seen a better point than the final iterate
    if rec.best < value:
        value, theta = rec.best, rec.best_x
    return value, theta, rec.history, converged


def minimize(objective, grad, theta0, settings: MinimizeSettings | None = None):
    """Local descent from theta0; returns (value, theta, history).

    ``objective`` maps a parameter vector to a float; ``grad`` maps it to the
    gradient vector (ignored by the simplex method).  Deterministic for fixed
    inputs.  Raises NumericError if the objective goes non-finite.
    """
    value, theta, history, _ = _minimize_full(
        objective, grad, theta0, settings or MinimizeSettings()
    )
    return value, theta, history


def run_vqe(
    spec: ModelSpec,
    basis: str,
    cfg: AnsatzConfig,
    operator_kind: str = MASS,
    seed: int = 42,
    restarts: int = 5,
    settings: MinimizeSettings | None = None,
) -> VqeResult:
    """Build the operator, minimize from ``restarts`` seeded starts, keep the best.

    Initial angles are drawn uniformly from [-pi, pi] with a PCG64 generator,
    so identical inputs give bit-identical results.  For mass operators the
    reported ``unscaled_mass`` divides out the family scale factor.
    """
    settings = settings or MinimizeSettings()
    pair = variable_pair(cfg.qubits, basis)
    built = build_operator(spec, pair, operator_kind)
    A = built.matrix

    def objective(theta):
        return expectation(ansatz_state(theta, cfg), A)

    def grad(theta):
        return gradient(theta, cfg, A)

    rng = np.random.default_rng(seed)
    best_value = np.inf
    best_theta = None
    best_history: list[tuple[int, float]] = []
    converged = False
    failures = 0
    for _ in range(restarts):
        theta0 = rng.uniform(-np.pi, np.pi, cfg.num_parameters)
        try:
            value, theta, history, conv = _minimize_full(objective, grad, theta0, settings)
        except NumericError:
            failures += 1
            continue
        if value < best_value:
            best_value, best_theta, best_history = value, theta, history
            converged = conv
    if best_theta is None:
        raise NumericError(f"all {restarts} restarts failed")
    unscaled = best_value / built.unscale if operator_kind == MASS else None
    return VqeResult(
        best_value=float(best_value),
        best_theta=np.asarray(best_theta),
        history=best_history,
        restarts_used=restarts - failures,
        converged=converged,
        model=spec.label(),
        basis=pair.basis,
        qubits=cfg.qubits,
        depth=cfg.depth,
        seed=seed,
        operator_kind=operator_kind,
        unscaled_mass=unscaled,
    )
