"""Exception hierarchy for latpath."""


class LatpathError(ValueError):
    """Base class for all validation errors raised by latpath."""


class DegeneratePolygon(LatpathError):
    pass


class NonConvexInput(LatpathError):
    pass


class InvalidOrder(LatpathError):
    pass


class InvalidLength(LatpathError):
    pass


class InvalidDelta(LatpathError):
    pass


class ContextMismatch(LatpathError):
    pass


class SignParseError(LatpathError):
    pass


class SignLengthMismatch(LatpathError):
    pass


class RegistryParseError(LatpathError):
    pass
