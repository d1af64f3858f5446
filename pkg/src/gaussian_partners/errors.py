"""Exception types raised by the library."""


class GaussianPartnersError(Exception):
    """Base class for all library errors."""


class InvalidDimensionError(GaussianPartnersError, ValueError):
    pass


class DimensionMismatchError(GaussianPartnersError, ValueError):
    pass


class NumericalDegeneracyError(GaussianPartnersError, ArithmeticError):
    """An eigen-decomposition or inversion was too ill-conditioned to trust."""


class DegenerateSubspaceError(GaussianPartnersError, ValueError):
    """The vectors do not span a symplectic (non-degenerate) subspace."""


class NonOrthonormalBasisError(GaussianPartnersError, ValueError):
    pass


class SingularCovarianceError(GaussianPartnersError, ValueError):
    pass


class UnphysicalStateError(GaussianPartnersError, ValueError):
    """The covariance violates the uncertainty relation (some nu < 1)."""


class WrongPurityError(GaussianPartnersError, ValueError):
    """A pure-state construction was called on a mixed state."""


class InternalConsistencyError(GaussianPartnersError, RuntimeError):
    """A proven bound or identity failed numerically."""


class NonOrthogonalSubsystemsError(GaussianPartnersError, ValueError):
    pass
