"""Exceptions shared across the package."""


class CapExceeded(Exception):
    """Raised when a computation would exceed a configured enumeration cap.

    The message includes an estimate of the refused work so callers can
    decide whether raising the cap is reasonable.
    """


class AntichainViolation(ValueError):
    """Raised when a collection required to be an antichain contains a
    comparable pair.  The offending pair is reported in the message."""

    def __init__(self, smaller, larger):
        self.smaller = smaller
        self.larger = larger
        super().__init__(f"not an antichain: {smaller!r} is contained in {larger!r}")
