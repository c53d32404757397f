"""Finite-dimensional position/momentum matrices and two-variable tensor pairs.

Two representations are supported:

* oscillator: ladder-operator combinations of the truncated harmonic
  oscillator, Q = (a + a^dag)/sqrt(2), P = i(a^dag - a)/sqrt(2); both
  tridiagonal.
* position: Q diagonal on the symmetric grid x_j = sqrt(2*pi/(4n))*(2j-n-1),
  j = 1..n, and P = F^dag Q F with the quarter-phase Sylvester unitary
  F_jk = exp(2*pi*i/(4n)*(2j-n-1)*(2k-n-1))/sqrt(n).

Two independent variables live on tensor factors of equal size: the first
(most significant) factor carries variable 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

OSCILLATOR = "osc"
POSITION = "pos"

_ALIASES = {
    "osc": OSCILLATOR,
    "oscillator": OSCILLATOR,
    "pos": POSITION,
    "position": POSITION,
}


def normalize_basis(basis: str) -> str:
    try:
        return _ALIASES[basis.lower()]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}; expected osc or pos") from None


def osc_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Oscillator-basis (Q, P) at dimension n >= 2.

    Q has sqrt(1)..sqrt(n-1) over sqrt(2) on the off-diagonals; P carries the
    same magnitudes times +-i/sqrt(2) (upper off-diagonal negative).
    """
    if n < 2:
        raise DimensionError(f"need n >= 2, got {n}")
    lower = np.zeros((n, n), dtype=complex)
    for j in range(n - 1):
        lower[j, j + 1] = np.sqrt(j + 1)  # annihilation
    raise_ = lower.conj().T
    Q = (lower + raise_) / np.sqrt(2)
    P = 1j * (raise_ - lower) / np.sqrt(2)
    return Q, P


def position_grid(n: int) -> np.ndarray:
    j = np.arange(1, n + 1)
    return np.sqrt(2 * np.pi / (4 * n)) * (2 * j - (n + 1))


def sylvester_unitary(n: int) -> np.ndarray:
    """Quarter-phase DFT-like unitary mapping position to momentum."""
    if n < 2:
        raise DimensionError(f"need n >= 2, got {n}")
    m = 2 * np.arange(1, n + 1) - (n + 1)
    phase = np.outer(m, m) * (2 * np.pi / (4 * n))
    return np.exp(1j * phase) / np.sqrt(n)


def pos_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Position-basis (Q, P) at dimension n >= 2: Q diagonal, P = F^dag Q F."""
    if n < 2:
        raise DimensionError(f"need n >= 2, got {n}")
    Q = np.diag(position_grid(n)).astype(complex)
    F = sylvester_unitary(n)
    P = F.conj().T @ Q @ F
    return Q, P


@dataclass(frozen=True)
class VariablePair:
    """Two commuting variables q1, q2 with momenta p1, p2 on 2^qubits dims."""

    qubits: int
    basis: str
    q1: np.ndarray
    q2: np.ndarray
    p1: np.ndarray
    p2: np.ndarray

    @property
    def dim(self) -> int:
        return 2**self.qubits


def variable_pair(qubits: int, basis: str) -> VariablePair:
    """Build (q1, q2, p1, p2) = (Q (x) I, I (x) Q, P (x) I, I (x) P).

    qubits must be even; each variable gets n = 2**(qubits/2) levels.
    """
    if qubits < 2 or qubits % 2 != 0:
        raise DimensionError(f"qubit count must be even and >= 2, got {qubits}")
    basis = normalize_basis(basis)
    n = 2 ** (qubits // 2)
    Q, P = osc_pair(n) if basis == OSCILLATOR else pos_pair(n)
    eye = np.eye(n)
    return VariablePair(
        qubits=qubits,
        basis=basis,
        q1=np.kron(Q, eye),
        q2=np.kron(eye, Q),
        p1=np.kron(P, eye),
        p2=np.kron(eye, P),
    )
