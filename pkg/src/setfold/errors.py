"""Exceptions shared across modules."""


class CapExceeded(ValueError):
    """An operation would exceed its configured size/depth budget.

    Raised instead of silently attempting something exponential; callers
    that really mean it can pass a bigger cap.
    """
