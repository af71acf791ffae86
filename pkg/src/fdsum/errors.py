"""Exception hierarchy.

Two families: ``InvalidInstance`` (user input was wrong) and
``InternalConsistencyError`` (an always-on certificate failed, i.e. a bug).
Everything else derives directly from ``FDError``.
"""


class FDError(Exception):
    pass


# -- user input ---------------------------------------------------------------

class InvalidInstance(FDError, ValueError):
    """The triple (n, a, b) violates a side condition of the sum."""


class BMustExceedOne(InvalidInstance):
    def __init__(self, b):
        super().__init__(f"b must be >= 2, got {b}")
        self.b = b


class EmptyA(InvalidInstance):
    def __init__(self):
        super().__init__("a must contain at least one entry (d >= 1)")


class NonPositiveA(InvalidInstance):
    def __init__(self, j, value):
        super().__init__(f"a_{j} = {value} must be a positive integer")
        self.j = j
        self.value = value


class NotCoprime(InvalidInstance):
    """gcd(x, m) != 1. ``j`` is the 1-based position in ``a`` when known."""

    def __init__(self, x, m, j=None):
        where = f"a_{j} = " if j is not None else ""
        super().__init__(f"{where}{x} is not coprime to {m}: gcd({x},{m})≠1")
        self.x = x
        self.m = m
        self.j = j


class BadDimension(InvalidInstance):
    pass


class BoundExceeded(InvalidInstance):
    pass


# -- algebra ------------------------------------------------------------------

class DivisionByZeroPoly(FDError, ZeroDivisionError):
    pass


class NotSquare(FDError, ValueError):
    pass


class Singular(FDError, ValueError):
    pass


class DependentColumns(FDError, ValueError):
    pass


class PoleAtPoint(FDError, ZeroDivisionError):
    pass


# -- certificates that must never fire ---------------------------------------

class InternalConsistencyError(FDError, AssertionError):
    pass


class CancellationFailure(InternalConsistencyError):
    pass


class NonRationalResult(InternalConsistencyError):
    pass


class ImaginaryResidual(InternalConsistencyError):
    pass


class DegenerateDenominator(InternalConsistencyError):
    pass


class MethodMismatch(InternalConsistencyError):
    pass
