"""Exception hierarchy shared by every module in the package."""


class HypercutError(Exception):
    """Base class for all errors raised by :mod:`hypercut`."""


class ValidationError(HypercutError, ValueError):
    """Raw input does not describe a valid hypergraph."""


class VertexOutOfRange(ValidationError):
    pass


class EmptyEdge(ValidationError):
    pass


class NonPositiveWeight(ValidationError):
    pass


class EmptyOrFullSet(HypercutError, ValueError):
    """A cut side was empty or equal to the whole vertex set."""


class EmptySet(HypercutError, ValueError):
    pass


class InvalidPartition(HypercutError, ValueError):
    pass


class UnknownEdgeId(HypercutError, KeyError):
    pass


class BadTerminals(HypercutError, ValueError):
    """Terminal sets are empty, overlapping or out of range."""


class KOutOfRange(HypercutError, ValueError):
    pass


class EmptyFamily(HypercutError, ValueError):
    pass


class OverlappingSubsets(HypercutError, ValueError):
    pass


class EmptySubset(HypercutError, ValueError):
    pass


class TooLarge(HypercutError):
    """Brute-force enumeration refused because the instance exceeds the size cap."""


class PreconditionViolated(HypercutError, ValueError):
    pass


class ParseError(HypercutError, ValueError):
    """Malformed hypergraph file; ``line`` is 1-indexed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
