"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A numeric parameter is outside its allowed range."""


class NoSuchObjectError(ValueError):
    """The requested combinatorial object provably does not exist."""


class ConditionViolationError(ValueError):
    """A construction precondition fails; carries the condition name and witnesses."""

    def __init__(self, condition, witnesses, message=None):
        self.condition = condition
        self.witnesses = tuple(witnesses)
        super().__init__(
            message or f"condition {condition} fails at {self.witnesses}"
        )


class ConstructionUnsoundError(RuntimeError):
    """A constructed labeling failed its own final verification."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotApplicableError(ValueError):
    """The operation's applicability condition is not met (e.g. bipartite input)."""


class SizeLimitError(ValueError):
    """The input exceeds the configured exact-computation size limit."""
