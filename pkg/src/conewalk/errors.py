"""Shared exception types, mapped to CLI exit codes in conewalk.cli."""


class InvalidArgumentError(ValueError):
    """Malformed or out-of-domain input (CLI exit code 2)."""


class ResourceCapError(RuntimeError):
    """A computation hit its element or depth cap (CLI exit code 3).

    Carries whatever partial result was safe to keep in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationError(AssertionError):
    """An internal cross-check failed (CLI exit code 1)."""
