"""Exception types shared across the library."""


class KCoverageError(Exception):
    """Base class for all library errors."""


class DegenerateGenerators(KCoverageError):
    """Two generator positions are closer than the minimum separation."""


class DegenerateCenters(DegenerateGenerators):
    """Two cluster centers coincide within tolerance."""


class ArityMismatch(KCoverageError):
    """A cost model received the wrong number of distance arguments."""


class RadarSingularity(KCoverageError):
    """Bistatic radar cost evaluated at (near-)zero range."""


class QuadratureNotConverged(KCoverageError):
    """Adaptive polygon quadrature hit its depth limit before converging."""


class ZeroMass(KCoverageError):
    """A cell carries no density mass, so centroid quantities are undefined."""


class StepRejected(KCoverageError):
    """An integration step increased the objective beyond tolerance."""


class EmptyRegion(KCoverageError):
    """A cluster owns no points; the algorithm must restart."""


class MaxRestartsExceeded(KCoverageError):
    """Restart budget of the clustering run exhausted."""


class TooLarge(KCoverageError):
    """Requested exhaustive enumeration exceeds the configured budget."""


class NotAFixedPoint(KCoverageError):
    """Stability analysis requested away from an equilibrium configuration."""


class SchemaError(KCoverageError):
    """Scenario file failed validation against the scenario schema."""


class NonDifferentiableWarning(UserWarning):
    """Gradient requested where the cost model is only subdifferentiable."""
