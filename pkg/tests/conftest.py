import numpy as np
import pytest

from bhvqe.basis import variable_pair
from bhvqe.models import ModelSpec, build_operator, MASS, ABS_H, ABS_COMM

# the eleven published mass rows: (label, spec, basis, exact_discrete, tight_vqe)
MASS_ROWS = [
    ("btz J=1 osc", ModelSpec("btz", J=1), "osc", 1.09727945, False),
    ("btz J=2 pos", ModelSpec("btz", J=2), "pos", 2.00235705, False),
    ("btz J=3 pos", ModelSpec("btz", J=3), "pos", 3.24533444, False),
    ("btz J=4 pos", ModelSpec("btz", J=4), "pos", 4.33327732, True),
    ("btz J=5 pos", ModelSpec("btz", J=5), "pos", 5.00359995, True),
    ("rn Q=1 osc", ModelSpec("rn", Q=1), "osc", 1.05957665, False),
    ("rn Q=2 pos", ModelSpec("rn", Q=2), "pos", 2.03869093, True),
    ("rnds Q=1 osc", ModelSpec("rnds", Q=1, lam=0.01), "osc", 1.05659733, False),
    ("rnds Q=2 pos", ModelSpec("rnds", Q=2, lam=0.01), "pos", 2.03223129, True),
    ("string2d Q=1 pos", ModelSpec("string2d", Q=1), "pos", 1.16279070, True),
    ("string2d Q=2 osc", ModelSpec("string2d", Q=2), "osc", 2.33625205, False),
]

# constraint rows: (label, spec, basis, kind, vqe_tol)
CONSTRAINT_ROWS = [
    ("absH string2d Q=1 pos", ModelSpec("string2d", Q=1), "pos", ABS_H, 1e-4),
    ("absH string2d Q=2 osc", ModelSpec("string2d", Q=2), "osc", ABS_H, 1e-4),
    ("absC string2d Q=1 pos", ModelSpec("string2d", Q=1), "pos", ABS_COMM, 1e-2),
    ("absC string2d Q=2 osc", ModelSpec("string2d", Q=2), "osc", ABS_COMM, 1e-2),
]


@pytest.fixture(scope="session")
def pairs():
    return {b: variable_pair(4, b) for b in ("osc", "pos")}


@pytest.fixture(scope="session")
def mass_operators(pairs):
    """label -> (BuiltOperator, exact_discrete, tight) for the published rows."""
    out = {}
    for label, spec, basis, ref, tight in MASS_ROWS:
        out[label] = (build_operator(spec, pairs[basis], MASS), ref, tight)
    return out


@pytest.fixture(scope="session")
def constraint_operators(pairs):
    out = {}
    for label, spec, basis, kind, tol in CONSTRAINT_ROWS:
        out[label] = (build_operator(spec, pairs[basis], kind), tol)
    return out


@pytest.fixture(scope="session")
def all_model_operators(mass_operators, constraint_operators):
    ops = {k: v[0] for k, v in mass_operators.items()}
    ops.update({k: v[0] for k, v in constraint_operators.items()})
    return ops


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (A + A.conj().T) / 2
