"""Exact-diagonalization reference path.

Every VQE run has a classical ground truth: the lowest eigenvalue of the same
finite matrix.  This module produces those values and full spectra.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .basis import variable_pair
from .linalg import eig_hermitian
from .models import MASS, ModelSpec, build_operator


@dataclass(frozen=True)
class SpectrumReport:
    model: str
    basis: str
    qubits: int
    operator_kind: str
    scaled_eigenvalues: np.ndarray
    unscaled_lowest_mass: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "model": self.model,
                "basis": self.basis,
                "qubits": self.qubits,
                "operator": self.operator_kind,
                "scaled_eigenvalues": [float(w) for w in self.scaled_eigenvalues],
                "unscaled_lowest_mass": self.unscaled_lowest_mass,
            },
            indent=2,
        )


def exact_spectrum(
    spec: ModelSpec, basis: str, qubits: int = 4, operator_kind: str = MASS
) -> SpectrumReport:
    """Full ascending spectrum of the scaled operator."""
    pair = variable_pair(qubits, basis)
    built = build_operator(spec, pair, operator_kind)
    w = eig_hermitian(built.matrix).eigenvalues
    unscale = built.unscale if operator_kind == MASS else 1.0
    return SpectrumReport(
        model=spec.label(),
        basis=pair.basis,
        qubits=qubits,
        operator_kind=operator_kind,
        scaled_eigenvalues=w,
        unscaled_lowest_mass=float(w[0] / unscale),
    )


def exact_lowest(
    spec: ModelSpec, basis: str, qubits: int = 4, operator_kind: str = MASS
) -> float:
    """Lowest eigenvalue, unscaled for the mass operator."""
    return exact_spectrum(spec, basis, qubits, operator_kind).unscaled_lowest_mass
