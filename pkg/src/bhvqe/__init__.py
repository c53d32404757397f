"""Quantum mini-superspace black holes: operators, spectra and a simulated VQE.

Builds the Mass and Hamiltonian-constraint operators of four black-hole
families (3D rotating BTZ, 4D charged RN, 4D charged RN-dS, 2D charged
string) as finite Hermitian matrices in an oscillator or position basis,
finds their lowest eigenstates by exact diagonalization and by a
statevector-simulated variational quantum eigensolver, and reproduces the
published reference tables and figure data.
"""

from .ansatz import AnsatzConfig, ansatz_state, expectation, expectation_pauli
from .basis import OSCILLATOR, POSITION, VariablePair, osc_pair, pos_pair, variable_pair
from .linalg import EigDecomposition, eig_hermitian, hermitize, matrix_function
from .models import (
    ABS_COMM,
    ABS_H,
    MASS,
    BuiltOperator,
    ModelSpec,
    ThermoRecord,
    build_abs_constraint,
    build_commutator_abs,
    build_hamiltonian,
    build_mass,
    build_operator,
    contour_field,
    extremal_mass,
    mass_potential,
    nariai_mass,
    thermo,
)
from .oracle import SpectrumReport, exact_lowest, exact_spectrum
from .pauli import PauliTerm, decompose, reconstruct, term_count
from .vqe import MinimizeSettings, VqeResult, gradient, minimize, run_vqe

__version__ = "0.1.0"

__all__ = [
    "AnsatzConfig", "ansatz_state", "expectation", "expectation_pauli",
    "OSCILLATOR", "POSITION", "VariablePair", "osc_pair", "pos_pair", "variable_pair",
    "EigDecomposition", "eig_hermitian", "hermitize", "matrix_function",
    "ABS_COMM", "ABS_H", "MASS", "BuiltOperator", "ModelSpec", "ThermoRecord",
    "build_abs_constraint", "build_commutator_abs", "build_hamiltonian",
    "build_mass", "build_operator", "contour_field", "extremal_mass",
    "mass_potential", "nariai_mass", "thermo",
    "SpectrumReport", "exact_lowest", "exact_spectrum",
    "PauliTerm", "decompose", "reconstruct", "term_count",
    "MinimizeSettings", "VqeResult", "gradient", "minimize", "run_vqe",
    "__version__",
]
