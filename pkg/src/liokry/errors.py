"""Exceptions and warning categories shared across the package."""


class LiokryError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(LiokryError, ValueError):
    """Array shape or dimensionality violates an operation's contract."""


class HermiticityError(LiokryError, ValueError):
    """Input required to be Hermitian deviates beyond tolerance."""


class SolverError(LiokryError, RuntimeError):
    """A dense linear-algebra routine failed or broke its residual contract."""


class ScalingError(LiokryError, RuntimeError):
    """Matrix exponential overflowed; reports the offending norm."""


class StabilityError(LiokryError, RuntimeError):
    """A generator eigenvalue has positive real part beyond tolerance."""


class OracleError(LiokryError, RuntimeError):
    """Spectral classification failed (e.g. no null eigenvalue found)."""


class GapUndefinedError(LiokryError, RuntimeError):
    """No decaying mode exists, so a spectral gap cannot be extracted."""


class PositivityError(LiokryError, RuntimeError):
    """A reconstructed steady state is not positive semidefinite."""


class UnderflowError(LiokryError, RuntimeError):
    """All propagated basis columns underflowed to numerical zero."""


class AllSingularError(LiokryError, RuntimeError):
    """Every singular value of the overlap matrix fell below threshold."""


class GrowthError(LiokryError, RuntimeError):
    """Transfer-matrix eigenvalue outside the unit disk: nonphysical growth."""


class BlowUpError(LiokryError, RuntimeError):
    """Mean-field trajectory diverged past any sensible Fock truncation."""


class ConfigError(LiokryError, ValueError):
    """Run configuration document is malformed or inconsistent."""


class TruncationWarning(UserWarning):
    """State or operator carries non-negligible weight at the space cutoff."""


class DegeneracyWarning(UserWarning):
    """Null space of the generator is numerically degenerate."""


class CoverageWarning(UserWarning):
    """Phase-space grid is small compared to the state's support."""


class WindingWarning(UserWarning):
    """Transfer-matrix phase near the branch cut; frequency may wind."""
