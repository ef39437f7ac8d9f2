"""Exception types raised by recurkit.

Every domain error derives from :class:`RecurkitError`; the CLI reports the
class name on standard error and exits with status 1.
"""


class RecurkitError(Exception):
    """Base class for domain errors."""


class ZeroInverse(RecurkitError, ZeroDivisionError):
    pass


class DuplicateRoot(RecurkitError, ValueError):
    pass


class BothZero(RecurkitError, ValueError):
    pass


class ZeroPolynomial(RecurkitError, ValueError):
    pass


class PoleAtNode(RecurkitError, ValueError):
    pass


class InvalidRecurrence(RecurkitError, ValueError):
    """Recurrence with vanishing last coefficient or mismatched initial data."""


class RootsDontSplit(RecurkitError, ValueError):
    """Characteristic polynomial has roots outside the Gaussian rationals."""


class RootMismatch(RecurkitError, ValueError):
    pass


class DenominatorMismatch(RecurkitError, ValueError):
    pass


class DegreeTooLarge(RecurkitError, ValueError):
    pass


class NodeOnContour(RecurkitError, ValueError):
    pass


class NodeOutsideContour(RecurkitError, ValueError):
    """An interpolation node or the evaluation point is not enclosed."""


class PoleInsideContour(RecurkitError, ValueError):
    pass


class FactorizationMismatch(RecurkitError, ValueError):
    pass


class NonzeroShiftUnsupported(RecurkitError, ValueError):
    pass


class IdenticallyZero(RecurkitError, ValueError):
    pass


class ZeroAlpha(RecurkitError, ValueError):
    pass


class EqualTwists(RecurkitError, ValueError):
    pass


class SingularMatrix(RecurkitError, ArithmeticError):
    pass
