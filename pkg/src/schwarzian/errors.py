"""Exception types shared across the package."""


class SchwarzianError(Exception):
    """Base class for all package-specific errors."""


class DegenerateLatticeError(SchwarzianError, ValueError):
    """Raised when g2^3 - 27*g3^2 vanishes and a genuine lattice is required."""


class PoleProximityError(SchwarzianError, ArithmeticError):
    """Evaluation attempted too close to a pole.

    ``limit_value`` is set when the offending point is a removable spot of
    the quantity being evaluated (e.g. an elliptic-fractional solution at a
    lattice point, where the solution tends to a finite limit).
    """

    def __init__(self, message, limit_value=None):
        super().__init__(message)
        self.limit_value = limit_value


class CriticalPointError(SchwarzianError, ArithmeticError):
    """The first derivative vanishes, so the Schwarzian has a pole here."""


class SingularityInDiskError(SchwarzianError, ArithmeticError):
    """A sampling disk for ring differentiation contains a singularity."""


class AmbiguousMultiplicityError(SchwarzianError, ValueError):
    """Two roots sit too close to decide between 'equal' and 'distinct'."""


class NoTranscendentalSolutionError(SchwarzianError, ValueError):
    """S(u,z) = 0 forces u to be a Mobius map, never transcendental."""


class CertificationError(SchwarzianError, RuntimeError):
    """A constructed solution failed its own residual check (internal bug)."""


class DocumentError(SchwarzianError, ValueError):
    """A JSON document does not match the expected schema."""
