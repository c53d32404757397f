"""Dense Hermitian linear algebra: eigendecomposition and spectral functions.

All operators in this package are dense complex square matrices of dimension
at most a few hundred, so everything here goes through a full
eigendecomposition.  Spectral functions are evaluated as V f(L) V^dag, which
keeps the output exactly Hermitian up to floating-point roundoff.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionError,
    HermiticityError,
    HermiticityWarning,
    NegativeSpectrumError,
)

#: Default absolute cutoff below which eigenvalues count as zero for
#: pseudo-inverse powers (Moore-Penrose convention).
DEFAULT_CUTOFF = 1e-12

HERMITICITY_TOL = 1e-10


def hermiticity_defect(A: np.ndarray) -> float:
    """Max-norm of A - A^dag."""
    A = np.asarray(A)
    return float(np.max(np.abs(A - A.conj().T))) if A.size else 0.0


def _require_square(A: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")
    return A


def _require_hermitian(A: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    A = _require_square(A)
    defect = hermiticity_defect(A)
    if defect > tol:
        raise HermiticityError(
            f"matrix is not Hermitian: defect {defect:.3e} > {tol:.1e}", defect=defect
        )
    return A


@dataclass(frozen=True)
class EigDecomposition:
    """Full spectrum of a Hermitian matrix.

    eigenvalues are sorted ascending; eigenvectors[:, k] is the (orthonormal)
    eigenvector belonging to eigenvalues[k].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eig_hermitian(A: np.ndarray, tol: float = HERMITICITY_TOL) -> EigDecomposition:
    """Diagonalize a Hermitian matrix.

    Raises HermiticityError when the Hermiticity defect exceeds ``tol``.
    The returned eigenvalues are real and ascending.
    """
    A = _require_hermitian(A, tol)
    w, V = np.linalg.eigh(A)
    return EigDecomposition(eigenvalues=w, eigenvectors=V)


def _spectral_map(kind: str, w: np.ndarray, cutoff: float) -> np.ndarray:
    if kind == "abs":
        return np.abs(w)
    if kind == "sqrt_psd":
        if np.min(w) < -cutoff:
            raise NegativeSpectrumError(
                f"sqrt_psd: eigenvalue {np.min(w):.3e} below -{cutoff:.1e}"
            )
        floored = np.where(np.abs(w) <= cutoff, 0.0, np.clip(w, 0.0, None))
        return np.sqrt(floored)
    if kind.startswith("inv_pow"):
        k = int(kind[len("inv_pow"):])
        if k not in (1, 2, 3, 4):
            raise ValueError(f"inv_pow order must be 1..4, got {k}")
        keep = np.abs(w) > cutoff
        out = np.zeros_like(w)
        out[keep] = 1.0 / w[keep] ** k
        return out
    raise ValueError(f"unknown spectral function tag {kind!r}")


def matrix_function(A: np.ndarray, kind: str, cutoff: float = DEFAULT_CUTOFF) -> np.ndarray:
    """Apply a spectral function to a Hermitian matrix.

    kind is one of "abs", "sqrt_psd", or "inv_powK" with K in 1..4.  For the
    inverse powers, eigenvalues with |lambda| <= cutoff map to zero
    (Moore-Penrose convention); for sqrt_psd, eigenvalues with
    |lambda| <= cutoff map to zero and anything below -cutoff raises
    NegativeSpectrumError.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    dec = eig_hermitian(A)
    fw = _spectral_map(kind, dec.eigenvalues, cutoff)
    V = dec.eigenvectors
    out = (V * fw) @ V.conj().T
    return hermitize(out, tol=np.inf)


def hermitize(A: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Return the Hermitian part (A + A^dag)/2.

    Warns (HermiticityWarning) when the symmetrized-away defect exceeds
    ``tol``; pass tol=np.inf to silence.
    """
    A = _require_square(A)
    defect = hermiticity_defect(A)
    if defect > tol:
        warnings.warn(
            f"hermitize: symmetrizing away defect {defect:.3e} > {tol:.1e}",
            HermiticityWarning,
            stacklevel=2,
        )
    return (A + A.conj().T) / 2
