"""Shared exception types."""


class ParseError(ValueError):
    """Malformed graph input; message names the offending line."""


class CapExceededError(RuntimeError):
    """A resource cap (vertex count) was exceeded; pass a larger cap to override."""
