"""Exception hierarchy shared by every module."""


class ZetaCrucibleError(Exception):
    """Base class for all package errors."""


class NonConvergence(ZetaCrucibleError, ArithmeticError):
    """A quadrature did not reach its tolerance within the refinement budget."""


class InvalidDomain(ZetaCrucibleError, ValueError):
    pass


class TailUnbounded(NonConvergence):
    """The tail of a semi-infinite integral could not be controlled."""


class InvalidOrder(ZetaCrucibleError, ValueError):
    """Zeta/lambda order below 2."""


class MapOverflow(ZetaCrucibleError, OverflowError):
    pass


class SingularPoint(ZetaCrucibleError, ValueError):
    pass


class DimensionTooLarge(ZetaCrucibleError, ValueError):
    pass


class BadEpsilon(ZetaCrucibleError, ValueError):
    pass


class ConfigError(ZetaCrucibleError, ValueError):
    pass


class MethodMismatch(ZetaCrucibleError, ValueError):
    pass
