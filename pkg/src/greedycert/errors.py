"""Exception types shared across the package."""


class GreedyCertError(Exception):
    """Base class for errors raised by this package."""


class FeasibilityError(GreedyCertError, ValueError):
    """A string or action violates the matroid constraint."""


class DegenerateInstanceError(GreedyCertError, ValueError):
    """No positive marginal gain anywhere; no ratio can be certified."""


class EnumerationCapError(GreedyCertError, RuntimeError):
    """Exhaustive enumeration would exceed the configured cap."""


class InstanceFormatError(GreedyCertError, ValueError):
    """Instance file does not match the documented JSON schema."""
