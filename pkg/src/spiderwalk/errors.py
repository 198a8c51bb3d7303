"""Exception types raised across the package.

All of these derive from :class:`ValueError` so that callers who do not
care about the fine-grained category can still catch misuse the usual way.
"""

__all__ = [
    "SpiderwalkError",
    "InvalidParamsError",
    "UnrealizableWiringError",
    "BoundaryVertexError",
    "DimensionMismatchError",
    "RadiusTooSmallError",
    "ConvergenceFailureError",
    "ParamsOutOfRangeError",
    "OutOfSupportError",
    "OutOfDomainError",
    "NotLocalizedError",
]


class SpiderwalkError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidParamsError(SpiderwalkError):
    """Parameters violate a structural constraint (a >= 1, b >= 2, 1 <= c <= b-1, ...)."""


class UnrealizableWiringError(SpiderwalkError):
    """No simple graph realizes the requested intra-stratum wiring."""


class BoundaryVertexError(SpiderwalkError):
    """The vertex lies on the truncation boundary, where the query is meaningless."""


class DimensionMismatchError(SpiderwalkError):
    """A state vector does not match the half-edge space it is used with."""


class RadiusTooSmallError(SpiderwalkError):
    """The truncated graph is too small for the requested evolution horizon."""


class ConvergenceFailureError(SpiderwalkError):
    """An eigensolver failed, or its output failed a residual check."""


class ParamsOutOfRangeError(SpiderwalkError):
    """Walk parameters lie outside the admissible region (p >= q > 0, r >= 0)."""


class OutOfSupportError(SpiderwalkError):
    """A density evaluation point lies outside the support interval."""


class OutOfDomainError(SpiderwalkError):
    """A closed-form expression was evaluated outside its validity domain."""


class NotLocalizedError(SpiderwalkError):
    """A localization-only quantity was requested for non-localizing parameters."""
