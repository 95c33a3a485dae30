"""Exception hierarchy shared by the core, the CLI and the HTTP routers."""

from typing import Optional


class CactusError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 2
    status_code = 409


class NetworkFormatError(CactusError):
    """The network document could not be parsed."""

    exit_code = 1
    status_code = 422


class InvalidNetworkError(CactusError):
    exit_code = 1
    status_code = 422

    def __init__(self, message: str, report: Optional[object] = None):
        super().__init__(message)
        self.report = report


class PreconditionError(CactusError):
    """An operation was called outside its domain."""


class NotAPartitionError(PreconditionError):
    pass


class GroveLimitError(PreconditionError):
    pass


class SingularInteriorError(PreconditionError):
    pass


class DisconnectedNetworkError(PreconditionError):
    pass


class ChartPivotError(PreconditionError):
    pass


class NotInImageError(PreconditionError):
    pass


class SiteShapeError(PreconditionError):
    pass


class StrandTracingError(PreconditionError):
    pass


class IdentityViolation(CactusError):
    """An identity that holds for every valid input failed; always a bug."""

    exit_code = 3
    status_code = 500
