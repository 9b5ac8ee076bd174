"""Exception taxonomy shared by all modules.

Domain-style failures derive from ValueError so callers that only know the
stdlib still catch them; iteration failures derive from RuntimeError.
"""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole (e.g. gamma at a nonpositive integer)."""


class RangeError(DomainError):
    """Argument outside the supported numeric range of an operation."""


class ParameterError(ValueError):
    """Invalid parameter combination (e.g. 2F1 with c a nonpositive integer)."""


class ConstraintError(ValueError):
    """A required parameter constraint is violated (e.g. 2c != a+b+1)."""


class BracketError(RuntimeError):
    """Root finding failed because the target is not enclosed by the bracket."""

    def __init__(self, message, saturating_endpoint=None):
        super().__init__(message)
        self.saturating_endpoint = saturating_endpoint


class IterationCapError(RuntimeError):
    """An iterative method hit its iteration cap before reaching tolerance."""


class UnknownIdentityError(KeyError):
    """Requested identity or check id is not registered."""
