class InvalidParameter(ValueError):
    """Raised when an input violates an operation's precondition."""


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exact search hits its node or size cap.

    The answer is indeterminate; callers must not treat this as a negative.
    """
