"""
Custom exceptions for the HyperTorsion application.
"""
from typing import Any, Dict, Optional

EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2


class HyperTorsionError(Exception):
    """Base exception class for HyperTorsion specific errors."""

    def __init__(
        self,
        detail: str = "An error occurred",
        error_code: str = "error",
        exit_code: int = EXIT_MATH_FAILURE,
        extra: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.detail = detail
        self.error_code = error_code
        self.exit_code = exit_code
        self.extra = extra or {}
        super().__init__(detail)

    def to_dict(self) -> Dict[str, Any]:
        """JSON error document written to standard error by the CLI."""
        return {"error": self.error_code, "detail": self.detail, **self.extra}


# --- Usage errors (exit code 2) ---

class UsageError(HyperTorsionError):
    """Raised when command-line input or call arguments are invalid."""

    def __init__(self, detail: str = "Usage error", error_code: str = "usage_error", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code=error_code, exit_code=EXIT_USAGE, **kwargs)


class PolynomialSyntaxError(UsageError):
    """Raised when polynomial text does not follow the grammar."""

    def __init__(self, detail: str, offset: int) -> None:
        self.offset = offset
        super().__init__(
            detail=f"{detail} (at byte offset {offset})",
            error_code="syntax_error",
            extra={"offset": offset},
        )


class MissingParameterError(UsageError):
    """Raised when a family is requested without all of its parameters."""

    def __init__(self, detail: str = "Missing parameter") -> None:
        super().__init__(detail=detail, error_code="missing_parameter")


# --- Mathematical failures (exit code 1) ---

class AlgebraError(HyperTorsionError):
    """Raised when a polynomial or field operation has invalid input."""

    def __init__(self, detail: str = "Algebra error", error_code: str = "algebra_error", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code=error_code, **kwargs)


class NotASquareError(AlgebraError):
    """Raised when a square root is requested of a non-square field element."""

    def __init__(self, detail: str = "Element is not a square") -> None:
        super().__init__(detail=detail, error_code="not_a_square")


class ContinuedFractionError(HyperTorsionError):
    """Raised when an expansion precondition or internal invariant fails."""

    def __init__(self, detail: str = "Continued fraction error", error_code: str = "continued_fraction_error", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code=error_code, **kwargs)


class NotPeriodicError(ContinuedFractionError):
    """Raised when a periodic expansion is required but none was found."""

    def __init__(self, detail: str = "Expansion is not periodic within the bound", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code="not_periodic", **kwargs)


class SkewSymmetryError(ContinuedFractionError):
    """Raised when the quasi-period admits no consistent skew value."""

    def __init__(self, detail: str = "No consistent skew value") -> None:
        super().__init__(detail=detail, error_code="skew_symmetry_failed")


class PellCertificationError(ContinuedFractionError):
    """Raised when p^2 - f q^2 is not a nonzero constant."""

    def __init__(self, detail: str = "Pell identity failed") -> None:
        super().__init__(detail=detail, error_code="pell_failed")


class ConstructionError(HyperTorsionError):
    """Raised when curve construction parameters are inconsistent."""

    def __init__(self, detail: str = "Construction error", error_code: str = "construction_error", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code=error_code, **kwargs)


class DegenerateCurveError(ConstructionError):
    """Raised when a specialization has zero discriminant or a degree defect."""

    def __init__(self, detail: str = "Degenerate parameters", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code="degenerate_parameters", **kwargs)


class BadReductionError(HyperTorsionError):
    """Raised when a curve does not reduce well modulo a prime."""

    def __init__(self, detail: str = "Bad reduction", error_code: str = "bad_reduction", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code=error_code, **kwargs)


class NoRationalRootError(BadReductionError):
    """Raised when the reduced polynomial has no root in the prime field."""

    def __init__(self, detail: str = "No rational root modulo p", **kwargs: Any) -> None:
        super().__init__(detail=detail, error_code="no_rational_root", **kwargs)


class PrimeSearchError(HyperTorsionError):
    """Raised when too few admissible primes exist below the search bound."""

    def __init__(self, detail: str = "Prime search exhausted") -> None:
        super().__init__(detail=detail, error_code="prime_search_exhausted")


class GaloisError(HyperTorsionError):
    """Raised when the Galois criterion does not apply to the input."""

    def __init__(self, detail: str = "Galois criterion inapplicable") -> None:
        super().__init__(detail=detail, error_code="galois_inapplicable")
