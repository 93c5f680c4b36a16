"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input data lies outside the documented domain of an operation."""


class PreconditionError(ValueError):
    """An operation was called on data violating its stated precondition."""


class UnsupportedCutError(PreconditionError):
    """The cutting process was requested at threshold zero, where it is undefined."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
