"""Exception types shared across the package.

Each maps to a distinct failure mode so the CLI and the HTTP service can
translate them into stable exit codes / status codes.
"""


class TourPlanError(Exception):
    """Base class for all errors raised by this package."""


class OutOfWindowError(TourPlanError):
    """A time fell outside the tour window where the operation requires one inside."""


class ScenarioError(TourPlanError):
    """A scenario document failed validation.

    ``path`` points at the offending field, dotted/bracketed like
    ``spots[3].stay_minutes``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class InfeasibleRouteError(TourPlanError):
    """A supplied route violates the travel/stay chain or the tour window."""


class OracleLimitError(TourPlanError):
    """The exact search refused an instance larger than its configured limits."""


class SessionError(TourPlanError):
    """A session-level request could not be honoured (unknown id, tour over, ...)."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)
