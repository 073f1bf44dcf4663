"""Error handling utilities."""

from __future__ import annotations

from typing import Any

from ._models import ErrorDetail, ErrorResponse


class WorkbenchError(Exception):
    """Workbench error with a machine-readable type."""

    def __init__(self, error_type: str, message: str):
        self.error_type = error_type
        self.message = message
        super().__init__(message)


def dimension_mismatch(expected: int, got: int, what: str = "vector") -> WorkbenchError:
    """Create a dimension mismatch error."""
    return WorkbenchError(
        "DimensionMismatch", f"Expected {what} of length {expected}, got {got}"
    )


def quiver_mismatch() -> WorkbenchError:
    """Create an error for representations over different quivers."""
    return WorkbenchError("QuiverMismatch", "Representations are over different quivers")


def rank_mismatch(left: int, right: int) -> WorkbenchError:
    """Create an error for tube objects living in tubes of different rank."""
    return WorkbenchError("RankMismatch", f"Tube ranks differ: {left} vs {right}")


def invalid_quiver(message: str) -> WorkbenchError:
    """Create an invalid quiver error."""
    return WorkbenchError("InvalidQuiver", message)


def oriented_cycle() -> WorkbenchError:
    """Create an error for operations that need an acyclic quiver."""
    return WorkbenchError(
        "CyclicQuiver", "Quiver has an oriented cycle: path counts are infinite"
    )


def not_invertible(what: str = "matrix") -> WorkbenchError:
    """Create an error for a matrix that is not invertible over the integers."""
    return WorkbenchError("NotInvertible", f"The {what} is not invertible over the integers")


def invalid_weights(message: str) -> WorkbenchError:
    """Create an invalid weight type error."""
    return WorkbenchError("InvalidWeights", message)


def non_tubular(weights: tuple[int, ...]) -> WorkbenchError:
    """Create an error for a weight type with nonzero Euler characteristic."""
    return WorkbenchError(
        "NonTubular", f"Weight type {weights} is not tubular (Euler characteristic != 0)"
    )


def spherical_invariant(i: int, j: int, expected: Any, got: Any) -> WorkbenchError:
    """Create an error for a violated Gram invariant of spherical data."""
    return WorkbenchError(
        "SphericalInvariant",
        f"chi(e_{i}, e_{j}) = {got}, expected {expected}",
    )


def l_sequence_invariant(pair: str, expected: Any, got: Any) -> WorkbenchError:
    """Create an error for an L-sequence configuration with a wrong Euler value."""
    return WorkbenchError("LSequenceInvariant", f"chi({pair}) = {got}, expected {expected}")


def nonvanishing_ext() -> WorkbenchError:
    """Create the error raised by explicit twists outside the clean case."""
    return WorkbenchError(
        "NonvanishingExt",
        "nonvanishing Ext(E,X): cone not homology-split-determined",
    )


def undefined_slope() -> WorkbenchError:
    """Create an error for a class with rank and degree both zero."""
    return WorkbenchError("UndefinedSlope", "Slope is undefined for a class with (rk, deg) = (0, 0)")


def bracket_too_wide(slope: Any, lo: Any, hi: Any) -> WorkbenchError:
    """Create an error for a slope falling inside an irrational bracket."""
    return WorkbenchError(
        "BracketTooWide",
        f"Slope {slope} lies inside the bracket ({lo}, {hi}); use a tighter bracket",
    )


def misclassified(message: str) -> WorkbenchError:
    """Create an error for a torsion pair query with misclassified inputs."""
    return WorkbenchError("Misclassified", message)


def unknown_suite(name: str) -> WorkbenchError:
    """Create an unknown suite error."""
    return WorkbenchError("UnknownSuite", f"Unknown suite: '{name}'")


def unknown_format(fmt: str) -> WorkbenchError:
    """Create an unknown export format error."""
    return WorkbenchError("UnknownFormat", f"Unknown export format: '{fmt}'")


def bound_exceeded(bound: int) -> WorkbenchError:
    """Create an error for a search that ran past its bound."""
    return WorkbenchError("BoundExceeded", f"No period found up to {bound}")


def error_envelope(exc: Exception) -> dict:
    """Wrap an exception in the error envelope."""
    if isinstance(exc, WorkbenchError):
        detail = ErrorDetail(message=exc.message, type=exc.error_type)
    else:
        detail = ErrorDetail(message=str(exc), type="InvalidInput")
    return ErrorResponse(error=detail).model_dump()
