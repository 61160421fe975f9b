"""Exception types shared across the package."""


class QdoubleError(Exception):
    pass


class DivisionByZero(QdoubleError, ZeroDivisionError):
    pass


class InvalidArgument(QdoubleError, ValueError):
    pass


class DimensionMismatch(QdoubleError, ValueError):
    pass


class ParseError(QdoubleError, ValueError):
    pass


class StepBudgetExceeded(QdoubleError):
    """Rewriting exhausted its step budget: possible non-confluence, never a silent answer."""


class NoHopfData(QdoubleError):
    pass


class MissingYDStructure(QdoubleError):
    pass


class NotInBminus(QdoubleError, ValueError):
    pass


class NotInBplus(QdoubleError, ValueError):
    pass


class UnpairedGenerators(QdoubleError, ValueError):
    pass


class HeightCapExceeded(QdoubleError):
    pass


class DepthCapExceeded(QdoubleError):
    pass


class DegenerateQuotient(QdoubleError):
    """A graded pairing block became singular: signals a pairing-engine bug."""


class TruncationLoss(QdoubleError):
    """An action stepped over the truncation boundary of a module."""


class WrongSide(QdoubleError, ValueError):
    pass


class InvalidRange(QdoubleError, ValueError):
    pass
