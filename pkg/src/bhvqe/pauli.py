"""Pauli-string expansion of Hermitian matrices.

A Hermitian matrix A of dimension 2^q expands uniquely as
A = sum_n a_n P_n over the 4^q tensor products P_n of {I, X, Y, Z}, with
real coefficients a_n = Tr(P_n A)/2^q.  The leftmost label character acts
on the most significant tensor factor, matching the variable-pair layout
q1 = Q (x) I.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from functools import reduce
from itertools import product

import numpy as np

from .errors import DimensionError
from .linalg import hermiticity_defect, HERMITICITY_TOL
from .errors import HermiticityError

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

#: Default coefficient cutoff for decompose().
DEFAULT_ZERO_TOL = 1e-10

#: Cutoff at which the published term counts reproduce (see report module).
COUNT_TOL = 1e-6


@dataclass(frozen=True)
class PauliTerm:
    label: str
    coefficient: float


def pauli_matrix(label: str) -> np.ndarray:
    """Dense matrix of a Pauli string, e.g. "XIZY"."""
    if not label or any(c not in PAULI_1Q for c in label):
        raise DimensionError(f"invalid Pauli label {label!r}")
    return reduce(np.kron, (PAULI_1Q[c] for c in label))


def _qubits_of(dim: int) -> int:
    q = int(round(np.log2(dim)))
    if 2**q != dim:
        raise DimensionError(f"dimension {dim} is not a power of two")
    return q


def decompose(A: np.ndarray, zero_tol: float = DEFAULT_ZERO_TOL) -> list[PauliTerm]:
    """Expand a Hermitian matrix into Pauli terms, dropping |a_n| <= zero_tol."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    q = _qubits_of(A.shape[0])
    defect = hermiticity_defect(A)
    if defect > HERMITICITY_TOL:
        raise HermiticityError(
            f"decompose requires a Hermitian matrix (defect {defect:.3e})", defect=defect
        )
    dim = A.shape[0]
    At = A.T
    terms = []
    for labels in product("IXYZ", repeat=q):
        P = pauli_matrix("".join(labels))
        a = np.sum(P * At).real / dim  # Tr(P A) = sum(P * A^T)
        if abs(a) > zero_tol:
            terms.append(PauliTerm("".join(labels), float(a)))
    return terms


def reconstruct(terms: list[PauliTerm]) -> np.ndarray:
    """Dense matrix sum_n a_n P_n."""
    if not terms:
        raise DimensionError("cannot reconstruct from an empty term list")
    q = len(terms[0].label)
    if any(len(t.label) != q for t in terms):
        raise DimensionError("inconsistent Pauli label lengths")
    A = np.zeros((2**q, 2**q), dtype=complex)
    for t in terms:
        A += t.coefficient * pauli_matrix(t.label)
    return A


def term_count(terms: list[PauliTerm], threshold: float = 0.0) -> int:
    """Number of terms with |coefficient| > threshold."""
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    return sum(1 for t in terms if abs(t.coefficient) > threshold)


def terms_to_csv(terms: list[PauliTerm]) -> str:
    buf = io.StringIO()
    buf.write("label,coefficient\n")
    for t in terms:
        buf.write(f"{t.label},{t.coefficient!r}\n")
    return buf.getvalue()


def terms_from_csv(text: str) -> list[PauliTerm]:
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0] != "label,coefficient":
        raise ValueError("missing label,coefficient header")
    out = []
    for ln in lines[1:]:
        label, coeff = ln.split(",")
        out.append(PauliTerm(label, float(coeff)))
    return out


def terms_to_json(terms: list[PauliTerm]) -> str:
    return json.dumps(
        [{"label": t.label, "coefficient": t.coefficient} for t in terms], indent=2
    )


def terms_from_json(text: str) -> list[PauliTerm]:
    return [PauliTerm(d["label"], float(d["coefficient"])) for d in json.loads(text)]
