"""Exception hierarchy shared by all mpolykit modules."""


class MPolyKitError(Exception):
    """Base class for every error raised by this package."""


class ExponentError(MPolyKitError, ValueError):
    pass


class DivergentIntegral(MPolyKitError, ArithmeticError):
    """An S_x / S_y step hit a term with zero exponent in the integration variable."""


class InvalidAlpha(MPolyKitError, ValueError):
    pass


class GraphError(MPolyKitError, ValueError):
    """Malformed graph: self-loop, duplicate edge, or dangling endpoint."""


class UnknownVertex(MPolyKitError, KeyError):
    pass


class ParseError(MPolyKitError, ValueError):
    pass


class InvalidParameter(MPolyKitError, ValueError):
    pass


class UndefinedWeight(MPolyKitError, ArithmeticError):
    pass


class UnknownIndex(MPolyKitError, KeyError):
    pass


class OutOfRange(MPolyKitError, ValueError):
    pass


class UnsupportedIndex(MPolyKitError, KeyError):
    pass
