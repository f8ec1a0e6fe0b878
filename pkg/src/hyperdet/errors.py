"""Domain exceptions for the hyperdet pipeline."""


class HyperdetError(Exception):
    """Base exception for hyperdet errors.

    Subclasses declare an exit_code so the CLI can map any failure to its process
    exit status without per-command boilerplate.

    ERROR_CODE is a stable string constant printed with the message so scripted
    callers can tell error types apart from standard error alone.
    """

    exit_code: int = 1
    ERROR_CODE: str = "HYPERDET_ERROR"

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


# ---------------------------------------------------------------------------
# Input errors
# ---------------------------------------------------------------------------


class InvalidInputError(HyperdetError):
    """Raised when an input polynomial, direction or file is unusable."""

    exit_code = 1
    ERROR_CODE = "INVALID_INPUT"


class PolynomialSyntaxError(InvalidInputError):
    """Raised when polynomial text cannot be parsed; position is a 0-based offset."""

    ERROR_CODE = "POLYNOMIAL_SYNTAX"

    def __init__(self, detail: str, position: int) -> None:
        super().__init__(f"{detail} at position {position}")
        self.position = position


class NonHomogeneousError(InvalidInputError):
    """Raised when parsed terms do not share one total degree."""

    ERROR_CODE = "NON_HOMOGENEOUS"


class SingularTransformError(InvalidInputError):
    """Raised when a coordinate change matrix is not invertible."""

    ERROR_CODE = "SINGULAR_TRANSFORM"


class DegreeMismatchError(InvalidInputError):
    """Raised when polynomial, point or pencil degrees disagree."""

    exit_code = 5
    ERROR_CODE = "DEGREE_MISMATCH"


class DimensionMismatchError(InvalidInputError):
    """Raised when matrix or vector shapes disagree."""

    exit_code = 5
    ERROR_CODE = "DIMENSION_MISMATCH"


# ---------------------------------------------------------------------------
# Hyperbolicity gate
# ---------------------------------------------------------------------------


class NotHyperbolicError(HyperdetError):
    """Raised when a sampled line through e meets V(f) in non-real points."""

    exit_code = 2
    ERROR_CODE = "NOT_HYPERBOLIC"


class NotInterlacingError(HyperdetError):
    """Raised when a supplied interlacer fails the sampled interlacing test."""

    exit_code = 2
    ERROR_CODE = "NOT_INTERLACING"


# ---------------------------------------------------------------------------
# Intersection
# ---------------------------------------------------------------------------


class TransversalityError(HyperdetError):
    """Raised when V(f) and V(g) do not meet in d(d-1) distinct, transverse, non-real points."""

    exit_code = 3
    ERROR_CODE = "TRANSVERSALITY_FAILURE"


# ---------------------------------------------------------------------------
# Numerical kernels
# ---------------------------------------------------------------------------


class NumericsError(HyperdetError):
    """Base class for failures inside the dense numerical kernels."""

    exit_code = 4
    ERROR_CODE = "NUMERICS_ERROR"


class VanishingLeadingCoefficientError(NumericsError):
    """Raised when a univariate polynomial's leading coefficient is numerically zero."""

    ERROR_CODE = "VANISHING_LEADING_COEFFICIENT"


class NotHermitianError(NumericsError):
    """Raised when a matrix expected to be Hermitian is not, beyond tolerance."""

    ERROR_CODE = "NOT_HERMITIAN"


# ---------------------------------------------------------------------------
# Solver stages (A2)-(A6) and verification
# ---------------------------------------------------------------------------


class SolverError(HyperdetError):
    """Base class for failures in the splitting, basis and solve stages."""

    exit_code = 4
    ERROR_CODE = "SOLVER_ERROR"


class PairingError(SolverError):
    """Raised when intersection points cannot be matched with their conjugates."""

    ERROR_CODE = "PAIRING_FAILURE"


class VanishingDimensionError(SolverError):
    """Raised when the space of forms vanishing on S does not have dimension d."""

    ERROR_CODE = "VANISHING_DIMENSION"


class NotInSpanError(SolverError):
    """Raised when the interlacer does not lie in the vanishing space."""

    ERROR_CODE = "NOT_IN_SPAN"


class SystemConsistencyError(SolverError):
    """Raised when the conjugate block of the assembled system is not a signed copy."""

    ERROR_CODE = "SYSTEM_CONSISTENCY"


class RankDeficientError(SolverError):
    """Raised when the assembled system has rank below 3d^2."""

    ERROR_CODE = "RANK_DEFICIENT"


class LargeResidualError(SolverError):
    """Raised when the least-squares residual exceeds the configured fraction of |b|."""

    ERROR_CODE = "LARGE_RESIDUAL"


class NonPositiveScaleError(SolverError):
    """Raised when the scale constant c = f(e) / det(M(e)) is not positive."""

    ERROR_CODE = "NON_POSITIVE_SCALE"


class IndefiniteOutputError(SolverError):
    """Raised when the solved pencil is not positive definite at the direction used."""

    ERROR_CODE = "INDEFINITE_OUTPUT"


class IllConditionedFitError(SolverError):
    """Raised when the determinant interpolation matrix stays ill-conditioned after resampling."""

    ERROR_CODE = "ILL_CONDITIONED_FIT"


class NonRealDeterminantError(SolverError):
    """Raised when a Hermitian pencil yields a non-real determinant at a real point."""

    ERROR_CODE = "NON_REAL_DETERMINANT"
