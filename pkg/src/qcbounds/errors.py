"""Exception types shared across the package."""


class NonHermitianError(ValueError):
    """An operator that must be Hermitian is not, beyond tolerance."""


class ImaginaryExpectationError(ValueError):
    """An expectation value came back with a non-negligible imaginary part."""


class ConvergenceError(RuntimeError):
    """The iterative eigensolver hit its sweep limit before converging."""


class InvalidRankError(ValueError):
    """Requested density-matrix rank outside 1..4."""


class ThetaRangeError(ValueError):
    """Measurement angle theta outside the closed interval [0, pi]."""


class EntryRangeError(ValueError):
    """Correlation entry outside [-1, 1] by more than the clamping tolerance."""


class EpsilonRangeError(ValueError):
    """Noise parameter epsilon outside the closed interval [0, 1]."""


class EmptyCountsError(ValueError):
    """Outcome counts sum to zero, so no correlation can be estimated."""
