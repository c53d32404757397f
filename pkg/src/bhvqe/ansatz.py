"""Statevector simulation of the Ry + full-CNOT variational circuit.

The circuit acts on q qubits, qubit 0 being the most significant amplitude
bit.  It applies ``depth`` repetitions of [Ry rotation layer; full CNOT
entangler] followed by one final rotation layer, so it takes q*(depth+1)
angles.  The entangler applies CNOT(control i, target j) for every pair
i < j in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ParameterError
from .pauli import PauliTerm

FULL = "full"


@dataclass(frozen=True)
class AnsatzConfig:
    qubits: int
    depth: int = 3
    entanglement: str = FULL

    def __post_init__(self):
        if self.qubits < 1:
            raise ParameterError("qubits must be >= 1")
        if self.depth < 0:
            raise ParameterError("depth must be >= 0")
        if self.entanglement != FULL:
            raise ParameterError(f"unsupported entanglement {self.entanglement!r}")

    @property
    def num_parameters(self) -> int:
        return self.qubits * (self.depth + 1)


def _apply_ry(psi: np.ndarray, qubit: int, theta: float, q: int) -> np.ndarray:
    shaped = psi.reshape(2**qubit, 2, 2 ** (q - 1 - qubit))
    a = shaped[:, 0, :].copy()
    b = shaped[:, 1, :].copy()
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    shaped[:, 0, :] = c * a - s * b
    shaped[:, 1, :] = s * a + c * b
    return psi


def _apply_cnot(psi: np.ndarray, control: int, target: int, q: int) -> np.ndarray:
    # control < target always (lexicographic pair order)
    shaped = psi.reshape(
        2**control, 2, 2 ** (target - control - 1), 2, 2 ** (q - 1 - target)
    )
    tmp = shaped[:, 1, :, 0, :].copy()
    shaped[:, 1, :, 0, :] = shaped[:, 1, :, 1, :]
    shaped[:, 1, :, 1, :] = tmp
    return psi


def ansatz_state(theta: np.ndarray, cfg: AnsatzConfig) -> np.ndarray:
    """Statevector prepared from |0...0> by the parameterized circuit."""
    theta = np.asarray(theta, dtype=float).ravel()
    if theta.size != cfg.num_parameters:
        raise ParameterError(
            f"expected {cfg.num_parameters} angles, got {theta.size}"
        )
    q = cfg.qubits
    psi = np.zeros(2**q)
    psi[0] = 1.0
    pairs = [(c, t) for c in range(q) for t in range(c + 1, q)]
    k = 0
    for layer in range(cfg.depth + 1):
        for qubit in range(q):
            psi = _apply_ry(psi, qubit, theta[k], q)
            k += 1
        if layer < cfg.depth:
            for c, t in pairs:
                psi = _apply_cnot(psi, c, t, q)
    return psi.reshape(-1)


def expectation(psi: np.ndarray, A: np.ndarray) -> float:
    """Rayleigh quotient <psi|A|psi> for a Hermitian A; returns the real part."""
    psi = np.asarray(psi).ravel()
    A = np.asarray(A)
    if A.shape != (psi.size, psi.size):
        raise DimensionError(f"operator shape {A.shape} does not match state {psi.size}")
    val = np.vdot(psi, A @ psi)
    if abs(val.imag) > 1e-10:
        raise ValueError(f"expectation has imaginary part {val.imag:.3e}")
    return float(val.real)


def _bit_parity(values: np.ndarray) -> np.ndarray:
    """Parity of the set bits of each entry (small nonnegative ints)."""
    out = np.zeros_like(values)
    v = values.copy()
    while np.any(v):
        out ^= v & 1
        v >>= 1
    return out


def expectation_pauli(psi: np.ndarray, terms: list[PauliTerm]) -> float:
    """sum_n a_n <psi|P_n|psi> by index arithmetic, no dense matrices.

    Each Pauli string is a signed permutation of the computational basis:
    X/Y flip the qubit's bit, Z/Y contribute (-1)^bit, and each Y carries a
    global factor i.
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    n = psi.size
    q = int(round(np.log2(n)))
    if 2**q != n:
        raise DimensionError(f"state length {n} is not a power of two")
    idx = np.arange(n)
    total = 0.0
    for t in terms:
        if len(t.label) != q:
            raise DimensionError(
                f"label {t.label!r} does not match {q}-qubit state"
            )
        flip = 0
        signmask = 0
        ny = 0
        for k, c in enumerate(t.label):
            bit = 1 << (q - 1 - k)  # qubit 0 = most significant
            if c in ("X", "Y"):
                flip |= bit
            if c in ("Z", "Y"):
                signmask |= bit
            if c == "Y":
                ny += 1
        phase = (1j) ** ny * (-1.0) ** _bit_parity(idx & signmask)
        val = np.sum(np.conj(psi[idx ^ flip]) * phase * psi)
        total += t.coefficient * val.real
    return float(total)
