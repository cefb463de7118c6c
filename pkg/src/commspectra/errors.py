"""Exception types shared across the library.

The CLI maps these onto exit codes: input and precondition problems exit
with 2, numerical failures (non-convergence, broken proven invariants)
with 3.
"""


class CommSpectraError(Exception):
    """Base class for all library errors."""


class OrderMismatchError(CommSpectraError, ValueError):
    """Operands have incompatible matrix orders or shapes."""


class DegenerateInputError(CommSpectraError, ValueError):
    """A zero (or otherwise degenerate) input where a nonzero one is required."""


class PreconditionError(CommSpectraError, ValueError):
    """A documented precondition on the inputs is violated."""


class ConvergenceError(CommSpectraError, RuntimeError):
    """An iterative kernel failed to converge.

    The last known residual, when available, is attached as ``residual``.
    """

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class InvariantViolationError(CommSpectraError, RuntimeError):
    """A proven mathematical invariant failed numerically.

    This signals broken numerics (or a library bug), never new mathematics.
    """


class DegenerateSupportError(CommSpectraError, ValueError):
    """Witness assembly failed: the joint support is not two-dimensional."""


class ParseError(CommSpectraError, ValueError):
    """A matrix or parameter file could not be parsed."""
