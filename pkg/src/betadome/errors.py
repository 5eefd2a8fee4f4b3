"""Exception hierarchy.

Two branches: DomainError for bad inputs (CLI exit code 2) and NumericsError
for internal numeric failures that indicate a bug or an unmet tolerance
(CLI exit code 1).
"""


class BetadomeError(Exception):
    """Base class for all betadome errors."""


class DomainError(BetadomeError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class DegeneratePointError(DomainError):
    """A dome-boundary point was passed where an interior point is required."""


class NoDensityError(DomainError):
    """Density requested for a law that has no density (point mass / two-point)."""


class SingularEndpointError(DomainError):
    """Density requested at an endpoint where it diverges (alpha < 1 or beta < 1)."""


class MeanMismatchError(DomainError):
    """Operation requires equal means but the laws' means differ."""


class IncomparablePairError(DomainError):
    """Mean-preserving-spread magnitude requested for an incomparable pair."""


class NoCrossingError(DomainError):
    """No CDF crossing exists (or none could be bracketed) for the given pair."""


class OutsideDomeError(DomainError):
    """A queried (mean, variance) point lies outside the dome closure."""


class NumericsError(BetadomeError, RuntimeError):
    """Internal numeric failure; never raised for bad user input."""


class ConvergenceError(NumericsError):
    """An iteration (continued fraction, series) exhausted its cap."""


class ToleranceError(NumericsError):
    """A solver finished without meeting its required tolerance."""


class VerificationError(NumericsError):
    """A mathematically guaranteed invariant failed numerically (bug signal)."""
