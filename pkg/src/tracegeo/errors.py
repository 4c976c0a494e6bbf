"""Exception types raised throughout the library."""


class TraceGeoError(Exception):
    """Base class for all tracegeo errors."""


class SingularMatrixError(TraceGeoError):
    """A matrix that must be invertible is numerically singular."""


class DimensionMismatchError(TraceGeoError):
    """Operands have incompatible orders."""


class SpectrumOnCutError(TraceGeoError):
    """An eigenvalue lies on the closed negative real axis."""


class SpectrumNotPositiveError(TraceGeoError):
    """An eigenvalue fails to be positive real."""


class NotSpecialOrthogonalError(TraceGeoError):
    """Input is not in SO(n) within tolerance."""


class DegenerateMetricError(TraceGeoError):
    """A Gram eigenvalue is numerically zero; the metric computation broke down."""


class NotUnimodularError(TraceGeoError):
    """Determinant is not 1 within tolerance."""


class NonPositiveDeterminantError(TraceGeoError):
    """Determinant is not strictly positive."""


class NotSPDError(TraceGeoError):
    """Matrix is not symmetric positive definite."""


class NotSymmetricError(TraceGeoError):
    """Matrix is not symmetric."""


class NotUniqueError(TraceGeoError):
    """The geodesic arc between the endpoints is not unique."""


class DifferentComponentsError(TraceGeoError):
    """Endpoints lie in different connected components (determinant signs differ)."""


class IllConditionedError(TraceGeoError):
    """The answer is ambiguous at the requested tolerance."""


class DegenerateSectionError(TraceGeoError):
    """The metric restricted to the 2-plane is numerically degenerate."""


class LinearlyDependentError(TraceGeoError):
    """Vectors expected to span a 2-plane are linearly dependent."""


class NotTangentError(TraceGeoError):
    """Vector is not tangent to the determinant level set."""


class OracleMismatchError(TraceGeoError):
    """Two independent computations of the same quantity disagree."""
