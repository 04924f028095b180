"""Exception hierarchy shared by all modules."""


class DiscOrthoError(Exception):
    """Base class for every error raised by this package."""


class NonExactDivision(DiscOrthoError, ArithmeticError):
    pass


class SizeCapExceeded(DiscOrthoError, ValueError):
    pass


class NonPolynomialResult(DiscOrthoError):
    """A Wronskian times its prefactor did not reduce to a polynomial."""


class DegenerateParameters(DiscOrthoError):
    """Parameters hit an exceptional value (degree drop, root collision)."""


class UnsupportedFamily(DiscOrthoError, ValueError):
    pass


class UnsupportedRange(DiscOrthoError, ValueError):
    pass


class MismatchedExtra(DiscOrthoError, ValueError):
    pass


class InvalidSpec(DiscOrthoError, ValueError):
    pass


class PrecisionExhausted(DiscOrthoError):
    pass


class DegenerateInput(DiscOrthoError, ValueError):
    pass


class PairingFailure(DiscOrthoError):
    pass


class ZeroCollision(DiscOrthoError):
    pass


class SimpleZeroViolation(DiscOrthoError):
    pass


class ConvergenceFailure(DiscOrthoError):
    pass
