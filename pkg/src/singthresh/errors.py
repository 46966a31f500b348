class BudgetExceeded(RuntimeError):
    """A search hit its state budget; `partial` carries what was established so far."""

    def __init__(self, message: str, partial: object = None):
        super().__init__(message)
        self.partial = partial


class NotApplicable(ValueError):
    """The requested classification does not apply to this input."""


class PostconditionFailure(AssertionError):
    """A computed object failed its own verification; `details` names the offending part."""

    def __init__(self, message: str, details: object = None):
        super().__init__(message)
        self.details = details
