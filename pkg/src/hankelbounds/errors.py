"""Exception types raised across the package."""


class HankelBoundsError(Exception):
    """Base class for all package errors."""


class InfeasibleInput(HankelBoundsError, ValueError):
    """Coefficients do not belong to the Caratheodory class."""


class IndexOutOfRange(HankelBoundsError, IndexError):
    pass


class AlphaOutOfRange(HankelBoundsError, ValueError):
    pass


class InsufficientCoefficients(HankelBoundsError, ValueError):
    pass


class UnsupportedFunctional(HankelBoundsError, ValueError):
    pass


class SymbolMismatch(HankelBoundsError, ValueError):
    pass
