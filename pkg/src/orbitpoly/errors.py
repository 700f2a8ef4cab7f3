"""Exception hierarchy. The CLI maps each class to its own exit code."""


class OrbitPolyError(Exception):
    exit_code = 1


class InputError(OrbitPolyError, ValueError):
    """Malformed or inconsistent user input."""

    exit_code = 3


class UnknownElementError(InputError):
    exit_code = 4


class DegreeMismatchError(InputError):
    exit_code = 5


class NotPartialOrderError(InputError):
    exit_code = 6


class ActionError(InputError):
    """A group element fails to preserve the structure it should act on.

    ``witness`` is ``(g, a, b)``: the element and the related pair (or edge)
    whose image is not related.
    """

    exit_code = 7

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ConsistencyError(OrbitPolyError, RuntimeError):
    """An internal identity that must hold did not (non-integral Burnside
    average, degree assertion, route disagreement, ...)."""

    exit_code = 8


class BudgetExceededError(OrbitPolyError, RuntimeError):
    exit_code = 9
