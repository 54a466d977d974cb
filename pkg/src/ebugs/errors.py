"""Exception hierarchy shared by all ebugs modules."""


class EbugsError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePower(EbugsError):
    pass


class NotPrimitive(EbugsError):
    pass


class LogOfZero(EbugsError):
    pass


class NotADivisor(EbugsError):
    pass


class NotAWalk(EbugsError):
    pass


class InvalidColouring(EbugsError):
    pass


class NotFound(EbugsError):
    pass


class KTooLarge(EbugsError):
    pass


class DegenerateK(EbugsError):
    pass


class DegenerateField(EbugsError):
    pass


class OrderTooSmall(EbugsError):
    pass


class WindowMismatch(EbugsError):
    pass


class InvalidInput(EbugsError):
    pass


class CarvingFailed(EbugsError):
    pass


class NotPrime(EbugsError):
    pass


class TooLarge(EbugsError):
    pass


class Overflow(EbugsError):
    pass


class BudgetExceeded(EbugsError):
    """Search ran out of wall-clock budget.

    Carries the best result found so far in ``result`` (exhausted=False).
    """

    def __init__(self, result):
        super().__init__("search budget exceeded")
        self.result = result
