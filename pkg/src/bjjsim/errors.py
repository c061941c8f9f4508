"""Exception types shared across the package."""


class BjjError(Exception):
    """Base class for all package errors."""


class ParameterError(BjjError, ValueError):
    """A parameter is outside its allowed domain. The message names the field."""


class NumericError(BjjError, RuntimeError):
    """A numerical procedure failed (residual, norm drift, quadrature budget)."""


class BracketError(ParameterError):
    """A locator found its extremum at the edge of the scanned range."""
