"""Exception hierarchy shared by the library and the CLI."""


class RinftyError(Exception):
    """Base class for every error raised by this package."""


class RingMismatch(RinftyError, TypeError):
    pass


class ModulusMismatch(RingMismatch):
    pass


class NotAUnit(RinftyError, ArithmeticError):
    pass


class NotInvertible(RinftyError, ArithmeticError):
    pass


class DimensionMismatch(RinftyError, ValueError):
    pass


class RankTooSmall(RinftyError, ValueError):
    pass


class ShapeViolation(RinftyError, AssertionError):
    """A product of witness matrices did not have the predicted block shape.

    ``coords`` lists the offending (row, col) positions.
    """

    def __init__(self, message, coords=()):
        super().__init__(message)
        self.coords = list(coords)


class NonConstantRequired(RinftyError, ValueError):
    pass


class NotInGroup(RinftyError, ValueError):
    pass


class CapExceeded(RinftyError, RuntimeError):
    pass


class NotCharacteristic(RinftyError, ValueError):
    pass
