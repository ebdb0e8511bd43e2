"""Exception types raised across the package."""


class LderLabError(Exception):
    """Base class for all errors raised by lderlab."""


class DimensionError(LderLabError, ValueError):
    """Vector, matrix or subspace shapes do not match."""


class CapExceededError(LderLabError, ValueError):
    """A requested order or arity is beyond the supported cap."""


class VarietyError(LderLabError, ValueError):
    """The input algebra does not satisfy the identities an operation needs."""


class RadicalCriterionError(LderLabError):
    """A form-based radical failed post-validation.

    The message always starts with ``radical-criterion-inapplicable``.
    """


class InconsistencyError(LderLabError, AssertionError):
    """Two independent computations of the same quantity disagree.

    This signals an implementation bug, never a property of the input.
    """


class SpectrumError(LderLabError, ValueError):
    """The characteristic polynomial has roots outside the rationals."""


class ParseError(LderLabError, ValueError):
    """Malformed bracket grammar or algebra document."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class PreconditionError(LderLabError, ValueError):
    """An operation was called on input outside its stated domain."""
