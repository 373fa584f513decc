class LeibnizError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatch(LeibnizError):
    """Operands do not have compatible shapes or owning algebras."""


class AlgebraParseError(LeibnizError):
    """A JSON document does not follow the algebra interchange format."""

    def __init__(self, message, position='$'):
        self.position = position
        super().__init__(f"{position}: {message}")


class LeibnizViolation(LeibnizError):
    """The Leibniz identity fails on a basis triple."""

    def __init__(self, triple, residual, message=None):
        self.triple = tuple(triple)
        self.residual = residual
        super().__init__(message or f"Leibniz identity fails at basis triple {self.triple}")


class NotAnIdeal(LeibnizError):
    """A subspace expected to be a two-sided ideal is not one."""


class NotNilpotent(LeibnizError):
    """An operator or algebra expected to be nilpotent is not."""


class InvalidParameters(LeibnizError):
    """Family parameters are out of range or malformed."""


class PreconditionFailed(LeibnizError):
    """An operation's precondition does not hold; the message names it."""

    def __init__(self, precondition, detail=''):
        self.precondition = precondition
        message = f"precondition failed: {precondition}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class NonlinearStageError(LeibnizError):
    """A cross-action constraint has a constant term, so zero is not a solution."""


class NotClosed(LeibnizError):
    """A subspace used as a subalgebra is not closed under the bracket."""
