"""Exception types shared across the package."""


class SatelliteKitError(Exception):
    """Base class for every error raised by satellite_kit."""


class DimensionError(SatelliteKitError, ValueError):
    """Polynomials, points or directions disagree on the number of variables."""


class NotAGermError(SatelliteKitError, ValueError):
    """The polynomial is zero or does not vanish at the origin."""


class BudgetExhausted(SatelliteKitError, RuntimeError):
    """A seeded search ran out of attempts."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class ZeroOnCircle(SatelliteKitError, ArithmeticError):
    """The polynomial could not be bounded away from zero on the circle."""


class StepBudgetExceeded(SatelliteKitError, RuntimeError):
    """Adaptive subdivision needed more steps than allowed."""


class NotAxisGeneric(SatelliteKitError, ValueError):
    """The last coordinate axis lies in the tangent cone."""


class OrderMismatch(SatelliteKitError, ValueError):
    """Two germs were required to have equal order but do not."""


class BadRadius(SatelliteKitError, ValueError):
    """A radius violates the constraints of the requested check."""


class ParseError(SatelliteKitError, ValueError):
    """Malformed polynomial text; ``column`` is 1-based."""

    def __init__(self, message: str, text: str = "", column: int = 0):
        self.text = text
        self.column = column
        where = f" at column {column}" if column else ""
        super().__init__(f"{message}{where}")
