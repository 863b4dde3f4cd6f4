"""Exception types raised across the package.

Two broad families matter to the CLI: bad input data (exit code 1) and bad
configuration (exit code 2). Everything below derives from one of the two.
"""


class ReldevError(Exception):
    """Base class for all package errors."""


class InputError(ReldevError):
    """Problems with the data itself (empty, non-finite, unparsable, ...)."""


class ConfigError(ReldevError):
    """Problems with parameters or requested options."""


class EmptyInput(InputError):
    pass


class NonFiniteValue(InputError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"non-finite value at position {position}")


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class IoError(InputError):
    pass


class TooFewPoints(InputError):
    pass


class TooLarge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NegativeTurns(ConfigError):
    pass


class ZeroRay(ConfigError):
    """Angle query with a ray of zero length."""


class DegenerateSigma(ConfigError):
    """Gaussian anchor whose spread is zero (all values identical)."""


class DegenerateView(ConfigError):
    """A view whose total weight vanishes."""
