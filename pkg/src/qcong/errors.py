"""Exception types shared across the toolkit."""


class QCongError(Exception):
    """Base class for all toolkit errors."""


class DenominatorNotInvertible(QCongError):
    """A denominator is not a unit for the requested modulus."""


class DivisionByZeroPoly(QCongError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class DivisionByZeroRat(QCongError, ZeroDivisionError):
    """Rational-function division by zero."""


class NonUnitConstantTerm(QCongError):
    """Attempt to invert a power series whose constant term is zero."""


class UnknownTarget(QCongError, KeyError):
    pass


class UnknownModulus(QCongError, KeyError):
    pass


class InvalidParams(QCongError, ValueError):
    pass


class InapplicablePoint(QCongError):
    """Every candidate specialization point was degenerate."""
