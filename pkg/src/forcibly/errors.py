"""Exception types raised across the package."""


class ForciblyError(ValueError):
    """Base class for all input and precondition failures."""


class EmptyInput(ForciblyError):
    pass


class ZeroPart(ForciblyError):
    pass


class NegativePart(ForciblyError):
    pass


class NotSubMultiset(ForciblyError):
    pass


class NotConstructible(ForciblyError):
    """An operation would produce an empty sequence."""


class GraphicalityViolation(ForciblyError):
    pass


class KTooLarge(ForciblyError):
    pass


class InvalidChoice(ForciblyError):
    pass


class DepthBudgetExceeded(ForciblyError):
    pass


class CapExceeded(ForciblyError):
    pass


class OddSum(ForciblyError):
    pass


class RangeViolation(ForciblyError):
    pass


class Infeasible(ForciblyError):
    pass


class TooLarge(ForciblyError):
    pass


class SearchTimeout(Exception):
    """Raised when a search passes its deadline before reaching a verdict."""
