"""Exception types raised by the detector."""


class InvalidConfig(ValueError):
    pass


class InvalidFen(ValueError):
    pass


class InvalidSquare(ValueError):
    pass


class StartSquareEmpty(ValueError):
    """The last-moved square must hold a piece."""


class EnumerationOverflow(RuntimeError):
    """Brute-force path enumeration exceeded its cap; use the flow oracle."""
