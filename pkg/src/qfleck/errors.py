"""Exception types shared across the package."""


class NonMonicDivisor(ValueError):
    """Raised when a monic-only division receives a divisor with leading coefficient != 1."""


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class ZeroPolynomial(ValueError):
    """Raised when an operation is undefined on the zero polynomial (e.g. valuations)."""


class CtxMismatch(ValueError):
    """Raised when elements of Z[zeta_2c] with different c are combined."""


class NotRational(ValueError):
    """Raised when a Z[zeta_2c] polynomial has a nonzero zeta component but an integer one was required."""


class PolyParseError(ValueError):
    pass
