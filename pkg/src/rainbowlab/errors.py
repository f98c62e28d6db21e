class RainbowLabError(Exception):
    """Base class for all errors raised by rainbowlab."""


class GraphInputError(RainbowLabError, ValueError):
    """Malformed graph data or an invalid vertex/edge reference."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(RainbowLabError):
    """An operation was called without the certificates it requires."""


class InapplicableError(PreconditionError):
    """The statement does not apply to the given parameters (e.g. empty segment)."""


class SpecError(RainbowLabError, ValueError):
    """Invalid generator spec or experiment configuration."""


class SchemaError(RainbowLabError, ValueError):
    """Report files disagree on schema version or are unparsable."""
