"""Shared exception types.

Input-domain problems are ValueErrors so callers can treat them uniformly;
resource ceilings get their own class because the CLI maps them to a distinct
exit code.
"""


class ParseError(ValueError):
    """Malformed polynomial expression or unknown variable."""


class AmbientMismatch(ValueError):
    """Operands live in different polynomial rings."""


class LimitExceeded(RuntimeError):
    """A configured bound (power exponent, window size) was exceeded."""


class WindowUnderflow(LimitExceeded):
    """A cohomology window is too narrow for a requested exact value."""
