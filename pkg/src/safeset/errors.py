"""Exception hierarchy shared by every module."""


class SafeSetError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidInputError(SafeSetError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedInputError(SafeSetError, ValueError):
    """The input is well formed but outside the supported domain."""


class ResourceLimitError(SafeSetError, RuntimeError):
    """A computation would exceed a configured size cap."""


class InternalInvariantError(SafeSetError, AssertionError):
    """A result failed its own post-check. This indicates a bug."""
