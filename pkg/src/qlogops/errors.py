"""Exception hierarchy shared across the package."""


class QlogopsError(Exception):
    """Base class for all errors raised by qlogops."""


class ShapeError(QlogopsError, ValueError):
    """Operands have incompatible dimensions."""


class ParseError(QlogopsError, ValueError):
    """Text input could not be parsed.

    ``line`` and ``position`` are 1-based; either may be ``None`` when the
    error is not tied to a location.
    """

    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class InvalidCodeError(QlogopsError, ValueError):
    """Code data violates a structural requirement (rank, orthogonality, ...)."""


class ReplayError(QlogopsError):
    """A decomposition log cannot be replayed."""


class GenerationError(QlogopsError, RuntimeError):
    """Random code generation failed to reach the requested parameters."""
