class PytriError(ValueError):
    """Invalid input to one of the library operations."""


class DegenerateTriangleError(PytriError):
    pass


class NotPythagoreanError(PytriError):
    pass


class InvalidSequenceError(PytriError):
    pass


class RootError(PytriError):
    """Raised when asked for the parent of the tree root."""


class DescartesError(PytriError):
    pass


class InvariantViolation(AssertionError):
    """An internal identity failed; indicates a bug, never bad input."""
