"""Exception hierarchy shared across the package."""


class OrthoscopeError(Exception):
    """Base class for all package errors."""


class ParseError(OrthoscopeError):
    """Syntax error in an input expression; carries the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ShapeError(OrthoscopeError):
    """Input has the wrong shape for the requested operation."""


class HypothesisError(OrthoscopeError):
    """A structural hypothesis fails (line not invariant, zero base, ...)."""


class WitnessVerificationError(OrthoscopeError):
    """A constructed witness failed its exact verification identity.

    This must never happen; it indicates an internal inconsistency and maps
    to CLI exit code 4.
    """
