"""Exception hierarchy shared by every module of the package."""


class ConstacyclicError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(ConstacyclicError, ValueError):
    pass


class NotPrimitivePolynomial(ConstacyclicError, ValueError):
    pass


class DivisionByZero(ConstacyclicError, ZeroDivisionError):
    pass


class InvalidSubfield(ConstacyclicError, ValueError):
    pass


class IncompatibleExtension(ConstacyclicError, ValueError):
    """The requested roots of lambda do not live in the given extension field."""


class CharacteristicDividesArea(ConstacyclicError, ValueError):
    pass


class ShapeMismatch(ConstacyclicError, ValueError):
    pass


class IndexOutOfRange(ConstacyclicError, IndexError):
    pass


class DuplicateOrbit(ConstacyclicError, ValueError):
    pass


class BasisError(ConstacyclicError, ArithmeticError):
    pass


class RankDeficiency(ConstacyclicError, ArithmeticError):
    pass


class LengthMismatch(ConstacyclicError, ValueError):
    pass


class TooLarge(ConstacyclicError, ValueError):
    pass


class BudgetExceeded(ConstacyclicError, RuntimeError):
    pass


class DimensionMismatch(ConstacyclicError, ValueError):
    pass


class ParseError(ConstacyclicError, ValueError):
    pass
