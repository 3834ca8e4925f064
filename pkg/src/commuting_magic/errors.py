"""Exception types shared across the package.

The CLI maps these onto exit codes, so every error raised on purpose by the
library derives from :class:`MagicSquareError`.
"""


class MagicSquareError(Exception):
    """Base class for errors raised deliberately by this package."""


class PreconditionError(MagicSquareError, ValueError):
    """An input violates an operation's precondition (non-magic seed, etc.)."""


class ShapeError(PreconditionError):
    """Operands have incompatible shapes or orders."""


class IntegerOverflowError(MagicSquareError, OverflowError):
    """A checked 64-bit integer operation would overflow.

    Retry on the arbitrary-precision path (``charpoly_exact`` and friends work
    on Python integers throughout).
    """


class ConvergenceError(MagicSquareError, ArithmeticError):
    """An iterative numerical method hit its iteration limit."""


class FormatError(MagicSquareError, ValueError):
    """Malformed textual input (square files, claim strings, names)."""
