class ForestComplexError(Exception):
    """Base class for every error raised by the toolkit."""


class InputError(ForestComplexError, ValueError):
    """Malformed parameters: bad vertices, loop edges, values outside a formula's range."""


class CapacityError(ForestComplexError):
    """A configured budget (facets, faces per dimension, matrix entries) was exceeded."""

    def __init__(self, message: str, limit: int = None, observed: int = None):
        super().__init__(message)
        self.limit = limit
        self.observed = observed
