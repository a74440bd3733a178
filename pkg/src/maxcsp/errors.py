"""Exception types shared across the package."""


class CspError(ValueError):
    """Base class for every error raised by this package."""


class FormatError(CspError):
    """Malformed input text or structurally invalid constraint data.

    ``line`` is the 1-based line number of the offending input when the
    error comes from a parser, ``None`` when raised at construction time.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.message = message
        self.line = line


class UnsupportedError(CspError):
    """Input or operation outside the supported problem class."""


class DomainError(CspError):
    """Numeric argument outside its mathematical domain."""


class DimensionError(CspError):
    """Assignment length does not match the instance."""


class SizeError(CspError):
    """Instance too large for exhaustive enumeration."""


class BudgetOverflowError(CspError):
    """Iteration budget exceeds 2^63; set max_iterations to cap the run."""
