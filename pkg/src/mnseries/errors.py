"""Exception types shared across the package."""


class MNSeriesError(Exception):
    """Base class for all library errors."""


class DomainError(MNSeriesError):
    """A coefficient or exponent is malformed for its coefficient domain."""


class ModeMismatchError(MNSeriesError):
    """Two series with incompatible modes or domains were combined."""


class PrecisionLossError(MNSeriesError):
    """A p-adic carry crossed the p^N modulus below the precision frontier."""


class ZeroSeriesError(MNSeriesError):
    """An operation that needs a nonzero series received the zero series."""


class ParseError(MNSeriesError):
    """A series literal failed to parse; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
