"""Exception types shared across the package."""


class BhvqeError(Exception):
    """Base class for all package errors."""


class DimensionError(BhvqeError):
    """Matrix or label dimensions are invalid or inconsistent."""


class HermiticityError(BhvqeError):
    """Input matrix is not Hermitian within tolerance.

    Carries the measured defect norm in ``defect``.
    """

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class NegativeSpectrumError(BhvqeError):
    """sqrt_psd was asked for a matrix with eigenvalues below -cutoff."""


class ModelError(BhvqeError):
    """Model parameters are inconsistent with the requested family."""


class ExtremalityError(BhvqeError):
    """Thermodynamics requested below the extremal mass bound."""


class NoNariaiError(BhvqeError):
    """The mass potential has no local maximum for these parameters."""


class DomainError(BhvqeError):
    """Argument outside the function's domain (e.g. b <= 0)."""


class ParameterError(BhvqeError):
    """Wrong number of variational parameters."""


class NumericError(BhvqeError):
    """A numeric evaluation produced a non-finite value."""


class HermiticityWarning(UserWarning):
    """Emitted when hermitize() symmetrizes away a defect above tolerance."""
