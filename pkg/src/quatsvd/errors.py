"""Exception types shared across the package."""


class ShapeMismatch(ValueError):
    """Operand dimensions are incompatible."""


class BadTarget(ValueError):
    """Target vector for a reflector is not a real unit vector."""


class NotBidiagonal(ValueError):
    """Matrix has nonzero entries outside the bidiagonal band."""


class NotSymmetric(ValueError):
    """Matrix handed to the symmetric eigensolver is not symmetric."""


class NoConvergence(RuntimeError):
    """Iteration cap reached before the residual dropped below tolerance."""


class GroupingFailure(RuntimeError):
    """Adjoint singular values did not cluster into clean groups of four."""


class FormatError(ValueError):
    """Malformed QMAT/RMAT text input.  Carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
