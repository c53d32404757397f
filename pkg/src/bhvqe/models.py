"""Black-hole model operators and closed-form thermodynamics.

Four mini-superspace families are supported, each reduced to two tensor
variables (q1, q2) with momenta (p1, p2).  Writing s = p1 + p2 and
d = q1 - q2, the scaled mass operators are

    btz       M  = s^2/2 + d^2/2 + (J^2/2)  d^-2
    rn        4M = s^2/2 + d^2/2 + 8 Q^2    d^-2
    rnds      4M = rn's 4M - (lambda/96) d^6
    string2d  M  = (ell^2/32) s^2 + d^2/2 + (Q^2/2) d^-2

and the Hamiltonian constraints (rn/rnds scaled by 4b)

    btz       H = (p1^2 - p2^2)/2 + (q1^2 - q2^2)/2 - (J^2/2)(q1+q2) d^-3
    rn        H = (p1^2 - p2^2)/2 + (q1^2 - q2^2)/2 - 8 Q^2 (q1^2-q2^2) d^-4
    rnds      H = rn's H - (lambda/32)(q1^2 - q2^2) d^4
    string2d  H = (p1^2 - p2^2)/16 + (q1^2 - q2^2)/ell^2 - Q^2 (q1+q2) d^-3

The difference operator d is singular on the diagonal of the grid, so its
inverse powers are regularized as d^-2 -> inv(d^2 + eps*I) (odd powers carry
one extra factor of d).  The regulator eps is frozen per (basis, family) by
matching the published reference spectra; see DIFFERENCE_REGULATOR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .basis import OSCILLATOR, POSITION, VariablePair, normalize_basis
from .errors import DomainError, ExtremalityError, ModelError, NoNariaiError

BTZ = "btz"
RN = "rn"
RNDS = "rnds"
STRING2D = "string2d"

FAMILIES = (BTZ, RN, RNDS, STRING2D)

#: Frozen Tikhonov regulators for inv((q1-q2)^2 + eps*I), keyed by
#: (basis, family).  Values reproduce the published "Exact Discrete" spectra
#: to better than 1e-8; see the README convention note.
DIFFERENCE_REGULATOR = {
    (OSCILLATOR, BTZ): 1e-4,
    (OSCILLATOR, RN): 1e-4,
    (OSCILLATOR, RNDS): 1e-4,
    (OSCILLATOR, STRING2D): 1e-4,
    (POSITION, BTZ): 0.43,
    (POSITION, RN): 0.1,
    (POSITION, RNDS): 0.1,
    (POSITION, STRING2D): 0.43,
}

#: Lowest eigenvalue of the scaled operator divided by this factor is the
#: reported mass.
UNSCALE_FACTOR = {BTZ: 1.0, RN: 4.0, RNDS: 4.0, STRING2D: 1.0}

_DEFAULT_ELL = {BTZ: 1.0, RN: 1.0, RNDS: 1.0, STRING2D: 4.0}

MASS = "mass"
ABS_H = "absH"
ABS_COMM = "absC"
OPERATOR_KINDS = (MASS, ABS_H, ABS_COMM)


@dataclass(frozen=True)
class ModelSpec:
    """Black-hole family plus its physical parameters.

    J is the BTZ angular momentum; Q the charge (rn, rnds, string2d);
    lam the positive cosmological constant (rnds only); ell the length
    scale.  ell defaults to 1 except for string2d where 4 reproduces the
    reference spectra.
    """

    family: str
    J: float | None = None
    Q: float | None = None
    lam: float | None = None
    ell: float | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ModelError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if (self.J is not None) != (self.family == BTZ):
            raise ModelError("J must be given exactly for the btz family")
        if (self.Q is not None) != (self.family in (RN, RNDS, STRING2D)):
            raise ModelError("Q must be given exactly for rn, rnds and string2d")
        if (self.lam is not None) != (self.family == RNDS):
            raise ModelError("lam must be given exactly for the rnds family")
        if self.lam is not None and self.lam <= 0:
            raise ModelError("lam must be positive")
        if self.ell is None:
            object.__setattr__(self, "ell", _DEFAULT_ELL[self.family])
        if self.ell <= 0:
            raise ModelError("ell must be positive")

    @property
    def unscale(self) -> float:
        return UNSCALE_FACTOR[self.family]

    def label(self) -> str:
        if self.family == BTZ:
            return f"btz J={self.J:g}"
        if self.family == RNDS:
            return f"rnds Q={self.Q:g} lam={self.lam:g}"
        return f"{self.family} Q={self.Q:g}"


@dataclass(frozen=True)
class BuiltOperator:
    """A scaled Hermitian model operator plus its bookkeeping."""

    matrix: np.ndarray
    unscale: float
    kind: str
    family: str
    basis: str
    qubits: int


def _check(spec: ModelSpec, pair: VariablePair) -> None:
    if not isinstance(spec, ModelSpec):
        raise ModelError(f"expected a ModelSpec, got {type(spec).__name__}")
    if pair.q1.shape[0] != pair.dim:
        raise ModelError("variable pair is inconsistent with its qubit count")


def regulator(spec: ModelSpec, basis: str) -> float:
    return DIFFERENCE_REGULATOR[(normalize_basis(basis), spec.family)]


def _inv_d2(pair: VariablePair, eps: float, power: int = 1) -> np.ndarray:
    """Regularized inverse power (d^2 + eps*I)^-power for d = q1 - q2.

    Evaluated spectrally so the result is Hermitian to machine precision.
    """
    d = pair.q1 - pair.q2
    w, V = np.linalg.eigh(d)
    f = (w**2 + eps) ** (-float(power))
    return (V * f) @ V.conj().T


def _guarded_hermitize(A: np.ndarray) -> np.ndarray:
    """Hermitize with a scale-aware defect guard (roundoff stays silent)."""
    scale = max(1.0, float(np.max(np.abs(A))))
    return linalg.hermitize(A, tol=1e-8 * scale)


def _sym(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Symmetrized product (ab + ba)/2; exact for the commuting factors here."""
    return (a @ b + b @ a) / 2


def _mass_parts(spec: ModelSpec, pair: VariablePair) -> tuple[np.ndarray, np.ndarray]:
    """Kinetic and potential pieces of the scaled mass operator."""
    eps = regulator(spec, pair.basis)
    d = pair.q1 - pair.q2
    s = pair.p1 + pair.p2
    quad = d @ d / 2
    if spec.family == BTZ:
        kin = s @ s / 2
        pot = quad + (spec.J**2 / 2) * _inv_d2(pair, eps)
    elif spec.family in (RN, RNDS):
        kin = s @ s / 2
        pot = quad + 8 * spec.Q**2 * _inv_d2(pair, eps)
        if spec.family == RNDS:
            pot = pot - (spec.lam / 96) * np.linalg.matrix_power(d, 6)
    else:  # string2d
        kin = (spec.ell**2 / 32) * (s @ s)
        pot = quad + (spec.Q**2 / 2) * _inv_d2(pair, eps)
    return kin, pot


def _hamiltonian_parts(spec: ModelSpec, pair: VariablePair) -> tuple[np.ndarray, np.ndarray]:
    """Kinetic and potential pieces of the scaled Hamiltonian constraint."""
    eps = regulator(spec, pair.basis)
    d = pair.q1 - pair.q2
    qq = pair.q1 @ pair.q1 - pair.q2 @ pair.q2
    pp = pair.p1 @ pair.p1 - pair.p2 @ pair.p2
    # odd inverse power: (q1+q2) d^-3 = (q1^2-q2^2) (d^2+eps)^-2
    if spec.family == BTZ:
        kin = pp / 2
        pot = qq / 2 - (spec.J**2 / 2) * _sym(qq, _inv_d2(pair, eps, power=2))
    elif spec.family in (RN, RNDS):
        kin = pp / 2
        pot = qq / 2 - 8 * spec.Q**2 * _sym(qq, _inv_d2(pair, eps, power=2))
        if spec.family == RNDS:
            pot = pot - (spec.lam / 32) * _sym(qq, np.linalg.matrix_power(d, 4))
    else:  # string2d
        kin = pp / 16
        pot = qq / spec.ell**2 - spec.Q**2 * _sym(qq, _inv_d2(pair, eps, power=2))
    return kin, pot


def build_mass(spec: ModelSpec, pair: VariablePair) -> BuiltOperator:
    """Scaled mass operator; lowest eigenvalue / unscale is the reported mass."""
    _check(spec, pair)
    kin, pot = _mass_parts(spec, pair)
    A = _guarded_hermitize(kin + pot)
    return BuiltOperator(A, spec.unscale, MASS, spec.family, pair.basis, pair.qubits)


def build_hamiltonian(spec: ModelSpec, pair: VariablePair) -> BuiltOperator:
    """Scaled Hamiltonian-constraint operator (annihilates physical states)."""
    _check(spec, pair)
    kin, pot = _hamiltonian_parts(spec, pair)
    A = _guarded_hermitize(kin + pot)
    return BuiltOperator(A, 1.0, ABS_H, spec.family, pair.basis, pair.qubits)


def build_abs_constraint(spec: ModelSpec, pair: VariablePair) -> BuiltOperator:
    """|H|: spectral absolute value of the Hamiltonian constraint (PSD)."""
    H = build_hamiltonian(spec, pair)
    A = linalg.matrix_function(H.matrix, "abs")
    return BuiltOperator(A, 1.0, ABS_H, spec.family, pair.basis, pair.qubits)


def build_commutator_abs(spec: ModelSpec, pair: VariablePair) -> BuiltOperator:
    """|[H, M]|: the PSD magnitude sqrt((HM-MH)^dag (HM-MH)).

    Splitting H = K_H + V_H and M = K_M + V_M, the kinetic pieces are
    functions of the commuting momenta and the potentials of the commuting
    coordinates, so [K_H, K_M] = [V_H, V_M] = 0 exactly and
    C = [K_H, V_M] + [V_H, K_M]; evaluating only those brackets avoids the
    huge cancelling potential-potential products.  C is anti-Hermitian, so
    sqrt(C^dag C) equals the spectral absolute value of the Hermitian iC.
    The commutator is odd under swapping the two variables and therefore has
    exact zero modes; eigenvalues at the roundoff scale are floored to zero.
    """
    _check(spec, pair)
    kin_h, pot_h = _hamiltonian_parts(spec, pair)
    kin_m, pot_m = _mass_parts(spec, pair)
    C = (kin_h @ pot_m - pot_m @ kin_h) + (pot_h @ kin_m - kin_m @ pot_h)
    K = _guarded_hermitize(1j * C)
    dec = linalg.eig_hermitian(K)
    w = np.abs(dec.eigenvalues)
    w[w <= 1e-9 * max(1.0, float(np.max(w)))] = 0.0
    V = dec.eigenvectors
    A = linalg.hermitize((V * w) @ V.conj().T, tol=np.inf)
    return BuiltOperator(A, 1.0, ABS_COMM, spec.family, pair.basis, pair.qubits)


_BUILDERS = {MASS: build_mass, ABS_H: build_abs_constraint, ABS_COMM: build_commutator_abs}


def build_operator(spec: ModelSpec, pair: VariablePair, kind: str) -> BuiltOperator:
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise ModelError(f"unknown operator kind {kind!r}; expected {OPERATOR_KINDS}") from None
    return builder(spec, pair)


# ----------------------------------------------------------------------------
# closed-form thermodynamics


@dataclass(frozen=True)
class ThermoRecord:
    r_plus: float
    r_minus: float
    entropy: float
    beta: float
    temperature: float


def extremal_mass(spec: ModelSpec) -> float:
    """Smallest mass with real horizons (the extreme black hole)."""
    if spec.family == BTZ:
        return spec.J / spec.ell
    return spec.Q


def thermo(spec: ModelSpec, M: float) -> ThermoRecord:
    """Horizon radii, entropy, inverse temperature and temperature at mass M.

    The rnds family is evaluated with the flat-space rn formulas.  Raises
    ExtremalityError below the extremal bound; exactly at the bound the
    temperature is zero and beta infinite.
    """
    bound = extremal_mass(spec)
    if M < bound:
        raise ExtremalityError(
            f"M = {M:g} below the extremal bound {bound:g} for {spec.family}"
        )
    if spec.family == BTZ:
        disc = math.sqrt(max(M**2 - (spec.J / spec.ell) ** 2, 0.0))
        rp2 = spec.ell**2 / 2 * (M + disc)
        rm2 = spec.ell**2 / 2 * (M - disc)
        rp, rm = math.sqrt(rp2), math.sqrt(rm2)
        entropy = 4 * math.pi * rp  # S = 2*pi*r+/(4G) with G = 1/8
        if rp2 > rm2:
            beta = 2 * math.pi * rp * spec.ell**2 / (rp2 - rm2)
        else:
            beta = math.inf
    elif spec.family in (RN, RNDS):
        disc = math.sqrt(max(M**2 - spec.Q**2, 0.0))
        rp, rm = M + disc, M - disc
        entropy = math.pi * rp**2  # S = 4*pi*r+^2/(4G) with G = 1
        beta = 2 * math.pi * rp**2 / disc if disc > 0 else math.inf
    else:  # string2d
        disc = math.sqrt(max(M**2 - spec.Q**2, 0.0))
        wp, wm = M + disc, M - disc
        rp = spec.ell * math.log(wp)
        rm = spec.ell * math.log(wm) if wm > 0 else -math.inf
        entropy = 4 * math.pi * wp  # phi_0 = 0
        beta = 2 * math.pi * spec.ell * wp / disc if disc > 0 else math.inf
    temperature = 0.0 if math.isinf(beta) else 1.0 / beta
    return ThermoRecord(rp, rm, entropy, beta, temperature)


def mass_potential(spec: ModelSpec, b: float) -> float:
    """Classical mass potential V_M(b); for string2d, b = e^-phi."""
    if b <= 0:
        raise DomainError(f"b must be positive, got {b:g}")
    if spec.family == BTZ:
        return b**2 / spec.ell**2 + spec.J**2 / (4 * b**2)
    if spec.family == RN:
        return b / 2 + spec.Q**2 / (2 * b)
    if spec.family == RNDS:
        return b / 2 - spec.lam * b**3 / 6 + spec.Q**2 / (2 * b)
    return b**2 / 2 + spec.Q**2 / (2 * b**2)


def _classical_mass(spec: ModelSpec, pa: float, b: float) -> float:
    if spec.family == BTZ:
        return pa**2 + mass_potential(spec, b)
    if spec.family in (RN, RNDS):
        return pa**2 / (2 * b) + mass_potential(spec, b)
    return spec.ell**2 * pa**2 / (8 * b**2) + mass_potential(spec, b)


def contour_field(
    spec: ModelSpec,
    M: float,
    pa: np.ndarray,
    b: np.ndarray,
) -> np.ndarray:
    """Residual grid f(p_a, b) = M_classical(p_a, b) - M, shape (len(pa), len(b)).

    The zero level set is the classically allowed boundary.
    """
    pa = np.asarray(pa, dtype=float)
    b = np.asarray(b, dtype=float)
    if b.size == 0 or pa.size == 0 or not (np.isfinite(pa).all() and np.isfinite(b).all()):
        raise DomainError("grid must be finite and nonempty")
    if np.min(b) <= 0:
        raise DomainError("b must be positive over the grid")
    out = np.empty((pa.size, b.size))
    for i, p in enumerate(pa):
        for j, bb in enumerate(b):
            out[i, j] = _classical_mass(spec, p, bb) - M
    return out


def nariai_mass(Q: float, lam: float, tol: float = 1e-12) -> float:
    """Mass at the local maximum of the rnds potential (horizon merger).

    Solves V'(b) = 1/2 - lam*b^2/2 - Q^2/(2 b^2) = 0 for the larger positive
    root by bisection to ``tol`` and returns V at that point.
    """
    if lam <= 0 or Q < 0:
        raise NoNariaiError("requires lam > 0 and Q >= 0")
    disc = 1.0 - 4.0 * lam * Q**2
    if disc <= 0:
        raise NoNariaiError("potential has no real critical point (4*lam*Q^2 >= 1)")
    # critical points solve lam*b^4 - b^2 + Q^2 = 0; use them to bracket
    b2_hi = (1.0 + math.sqrt(disc)) / (2.0 * lam)
    b2_lo = (1.0 - math.sqrt(disc)) / (2.0 * lam)
    lo = math.sqrt((b2_lo + b2_hi) / 2)
    hi = 2.0 * math.sqrt(b2_hi)

    def slope(b: float) -> float:
        return 0.5 - lam * b**2 / 2 - Q**2 / (2 * b**2)

    flo = slope(lo)
    if flo <= 0 or slope(hi) >= 0:
        raise NoNariaiError("failed to bracket the potential maximum")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if slope(mid) > 0:
            lo = mid
        else:
            hi = mid
    b_star = 0.5 * (lo + hi)
    spec = ModelSpec(RNDS, Q=Q, lam=lam)
    return mass_potential(spec, b_star)
