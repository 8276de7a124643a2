"""Exception hierarchy shared by the evaluation routes."""


class AlphaFnError(Exception):
    """Base class for all alphafn errors."""


class InvalidQueryError(AlphaFnError, ValueError):
    """An evaluation request violates a precondition (e.g. s < 1)."""


class DomainViolationError(AlphaFnError, ValueError):
    """A circle-integral argument lies outside the radius of convergence."""


class NonConvergenceError(AlphaFnError, ArithmeticError):
    """A series did not meet both stopping conditions within the term budget."""


class ToleranceNotReachedError(AlphaFnError, ArithmeticError):
    """Node doubling hit the node budget before the tolerance was met.

    The best result computed so far is attached as ``best``.
    """

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


class ImaginaryResidueError(AlphaFnError, ArithmeticError):
    """A result promised to be real carries an imaginary part above threshold."""
