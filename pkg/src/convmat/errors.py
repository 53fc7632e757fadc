"""Exception hierarchy shared by all convmat modules."""


class ConvmatError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatch(ConvmatError):
    """Operands have incompatible dimensions."""


class BadInput(ConvmatError):
    """Input data is structurally invalid (margin sums differ, zero lines, ...)."""


class SizeExceeded(ConvmatError):
    """An exhaustive operation was asked to run above its cell cap."""


class PreconditionViolated(ConvmatError):
    """An argument does not satisfy the operation's documented precondition."""


class Infeasible(ConvmatError):
    """No matrix satisfies the given data."""


class NegativeRank(Infeasible):
    """A residual rank went negative during reconstruction."""


class Inconsistent(Infeasible):
    """The filled matrix contradicts the margins, convexity, or the given
    ranked essential set."""


class InvalidMove(ConvmatError):
    """A switch was applied to four cells that do not form a switchable block."""


class SpecInvalid(ConvmatError):
    """A class-construction spec violates the nesting or coverage rules."""


class UnknownProperty(ConvmatError):
    """`verify` was asked for a property id that is not registered."""


class ParseError(ConvmatError):
    """Text input could not be parsed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RaggedRows(ParseError):
    """Matrix rows in a text block have unequal lengths."""


class NonBinaryChar(ParseError):
    """A matrix text block contains a character other than 0, 1, space."""
