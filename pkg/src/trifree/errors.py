"""Shared exception types."""


class LimitExceededError(RuntimeError):
    """An exact computation would exceed its documented size limit.

    Raised instead of silently degrading; callers that hit this on the
    probability engines should fall back to Monte Carlo estimation.
    """
