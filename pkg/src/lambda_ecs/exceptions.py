"""Exception hierarchy shared by every module of the package."""


class ECSError(Exception):
    """Base class for all errors raised by lambda_ecs."""


class DomainError(ECSError, ValueError):
    """An argument lies outside the domain of an operation (e.g. an empty cut)."""


class PreconditionError(ECSError, ValueError):
    """An input does not satisfy the documented precondition of an operation."""


class InsufficientWitnessesError(PreconditionError):
    """Fewer newly-undeletable edges than the requested witness count requires."""


class InternalInconsistencyError(ECSError, RuntimeError):
    """A postcondition the algorithm guarantees failed to hold.

    This never signals bad input: it means the implementation is wrong.
    """


class BudgetExceededError(ECSError, RuntimeError):
    """An exhaustive search would exceed its configured node budget."""


class GenerationError(ECSError, RuntimeError):
    """A random instance generator could not satisfy its parameters."""


class ParseError(ECSError, ValueError):
    """Malformed instance file. ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
