"""Exception types shared across the package."""


class SusyKitError(Exception):
    """Base class for everything raised deliberately by this package."""


class ValidationError(SusyKitError, ValueError):
    """An object or an operation's input violates a structural invariant."""


class SchemaError(SusyKitError, ValueError):
    """Malformed external input: JSON documents, CLI payloads."""
