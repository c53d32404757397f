import numpy as np
import pytest

from bhvqe.errors import DimensionError, HermiticityError
from bhvqe.pauli import (
    COUNT_TOL,
    PauliTerm,
    decompose,
    pauli_matrix,
    reconstruct,
    term_count,
    terms_from_csv,
    terms_from_json,
    terms_to_csv,
    terms_to_json,
)
from conftest import random_hermitian


def test_identity_decomposes_to_single_term():
    terms = decompose(np.eye(16))
    assert [(t.label, t.coefficient) for t in terms] == [("IIII", 1.0)]


def test_pauli_string_is_its_own_expansion():
    xx = pauli_matrix("XX")
    terms = decompose(xx)
    assert [(t.label, t.coefficient) for t in terms] == [("XX", 1.0)]


def test_reconstruct_zz():
    A = reconstruct([PauliTerm("ZZ", 0.5)])
    assert np.allclose(A, 0.5 * pauli_matrix("ZZ"))


def test_reconstruct_identity_16():
    assert np.allclose(reconstruct([PauliTerm("IIII", 1.0)]), np.eye(16))


def test_round_trip_random_hermitian():
    rng = np.random.default_rng(17)
    for _ in range(5):
        A = random_hermitian(rng, 8)
        back = reconstruct(decompose(A, zero_tol=0.0))
        assert np.max(np.abs(back - A)) < 1e-10


@pytest.mark.parametrize("q", [2, 3, 4])
def test_parseval(q):
    rng = np.random.default_rng(q)
    A = random_hermitian(rng, 2**q)
    terms = decompose(A, zero_tol=0.0)
    lhs = sum(t.coefficient**2 for t in terms) * 2**q
    rhs = np.linalg.norm(A, "fro") ** 2
    assert abs(lhs - rhs) < 1e-9 * max(1.0, rhs)


def test_linearity():
    rng = np.random.default_rng(23)
    A = random_hermitian(rng, 4)
    B = random_hermitian(rng, 4)
    ca = {t.label: t.coefficient for t in decompose(A, zero_tol=0.0)}
    cb = {t.label: t.coefficient for t in decompose(B, zero_tol=0.0)}
    cab = {t.label: t.coefficient for t in decompose(2.0 * A + 0.5 * B, zero_tol=0.0)}
    for label, val in cab.items():
        assert abs(val - (2.0 * ca[label] + 0.5 * cb[label])) < 1e-12


def test_coefficients_real(mass_operators):
    built, _, _ = mass_operators["btz J=1 osc"]
    terms = decompose(built.matrix, zero_tol=0.0)
    assert all(isinstance(t.coefficient, float) for t in terms)


@pytest.mark.parametrize(
    "label,count",
    [
        ("btz J=1 osc", 57),
        ("btz J=2 pos", 21),
        ("rn Q=1 osc", 57),
        ("rn Q=2 pos", 21),
        ("rnds Q=1 osc", 57),
        ("rnds Q=2 pos", 21),
        ("string2d Q=1 pos", 21),
        ("string2d Q=2 osc", 57),
    ],
)
def test_published_mass_term_counts(mass_operators, label, count):
    built, _, _ = mass_operators[label]
    assert len(decompose(built.matrix, zero_tol=COUNT_TOL)) == count


def test_published_constraint_term_counts(constraint_operators):
    absh_pos, _ = constraint_operators["absH string2d Q=1 pos"]
    assert len(decompose(absh_pos.matrix, zero_tol=COUNT_TOL)) == 36
    for label in ("absC string2d Q=1 pos", "absC string2d Q=2 osc"):
        built, _ = constraint_operators[label]
        assert len(decompose(built.matrix, zero_tol=COUNT_TOL)) == 72


def test_term_count_threshold():
    terms = [PauliTerm("II", 1.0), PauliTerm("XX", 1e-12), PauliTerm("ZZ", -0.3)]
    assert term_count(terms, 0.0) == 3
    assert term_count(terms, 1e-10) == 2
    assert term_count(terms, 0.5) == 1


def test_decompose_errors():
    with pytest.raises(DimensionError):
        decompose(np.eye(3))
    with pytest.raises(HermiticityError):
        decompose(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(DimensionError):
        reconstruct([PauliTerm("XX", 1.0), PauliTerm("X", 1.0)])


def test_csv_json_round_trip():
    terms = [PauliTerm("IZ", 0.25), PauliTerm("XY", -1.5)]
    assert terms_from_csv(terms_to_csv(terms)) == terms
    assert terms_from_json(terms_to_json(terms)) == terms
