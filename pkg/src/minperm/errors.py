class CapExceededError(RuntimeError):
    """Raised when a brute-force sweep would exceed the configured size cap."""
