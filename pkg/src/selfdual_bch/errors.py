"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CodingError(Exception):
    """Base class for user-facing errors raised by this package."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed; indicates an arithmetic bug."""


# gf
class NonPrimeCharacteristic(CodingError, ValueError):
    pass


class DegreeZero(CodingError, ValueError):
    pass


class OrderOverflow(CodingError, ValueError):
    pass


class InvalidSubfieldOrder(CodingError, ValueError):
    pass


# poly
class DivisionByZeroPolynomial(CodingError, ZeroDivisionError):
    pass


class FieldMismatch(CodingError, ValueError):
    pass


class LengthNotDividingGroupOrder(CodingError, ValueError):
    pass


class EmptyList(CodingError, ValueError):
    pass


class ZeroPolynomial(CodingError, ValueError):
    pass


# cyclotomic
class NonCoprimeModulus(CodingError, ValueError):
    pass


class OutOfRange(CodingError, ValueError):
    pass


class ShiftOutOfRange(CodingError, ValueError):
    pass


class NonDivisor(CodingError, ValueError):
    pass


# codes
class ZeroDimensional(CodingError, ValueError):
    pass


class FieldNotSquareOrder(CodingError, ValueError):
    pass


# bch
class NonCoprime(CodingError, ValueError):
    pass


class DeltaOutOfRange(CodingError, ValueError):
    pass


# mpc
class LengthMismatch(CodingError, ValueError):
    pass


class RankDeficientMatrix(CodingError, ValueError):
    pass


class SingularMatrix(RankDeficientMatrix):
    pass


class ClassificationRejected(CodingError, ValueError):
    pass


class GramNonzero(InvariantViolation):
    pass


# bounds
class ParamOutOfRange(CodingError, ValueError):
    pass


class NoCaseMatches(ParamOutOfRange):
    pass


class BudgetExceeded(CodingError, RuntimeError):
    pass
