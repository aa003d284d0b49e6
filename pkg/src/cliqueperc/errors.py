"""Shared exception types."""


class ParseError(ValueError):
    """Base for malformed text inputs (edge lists, covers, order files)."""


class MemoryBudgetError(RuntimeError):
    """Estimated key storage exceeded the configured soft memory limit."""

    def __init__(self, keys: int, key_bytes: int, budget_bytes: int):
        super().__init__(
            f"key storage estimate {key_bytes} bytes ({keys} keys) "
            f"exceeds budget of {budget_bytes} bytes"
        )
        self.keys = keys
        self.key_bytes = key_bytes
        self.budget_bytes = budget_bytes
