class SizeLimitError(ValueError):
    """An exact enumeration or dense materialization would exceed its size cap."""


class VerificationError(RuntimeError):
    """A certification pipeline found a mismatch between two independent routes."""

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.context = context
