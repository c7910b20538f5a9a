"""Exception types shared across the package."""


class GroupLawError(Exception):
    """Base class for all package errors."""


class ZeroInverse(GroupLawError, ZeroDivisionError):
    pass


class NotASquare(GroupLawError, ValueError):
    pass


class NotPrime(GroupLawError, ValueError):
    pass


class SingularCurve(GroupLawError, ValueError):
    """Raised when 4a^3 + 27b^2 vanishes in F_p."""


class NotOnCurve(GroupLawError, ValueError):
    pass


class CurveMismatch(GroupLawError, ValueError):
    pass


class ModulusMismatch(GroupLawError, ValueError):
    pass


class TooLarge(GroupLawError, ValueError):
    """An exhaustive operation was asked to run beyond its cost guard."""


class DegenerateSlope(GroupLawError, ZeroDivisionError):
    pass


class DivisionByZeroPolynomial(GroupLawError, ZeroDivisionError):
    pass


class UnknownLemma(GroupLawError, KeyError):
    pass
