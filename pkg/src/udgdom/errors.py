"""Exception hierarchy shared by all solver modules."""


class UDGDomError(ValueError):
    """Base class for invalid inputs and violated preconditions."""


class IsolatedVertexError(UDGDomError):
    """The graph has a vertex with no neighbours, so total domination is undefined."""

    def __init__(self, vertices, message=None):
        self.vertices = sorted(vertices)
        if message is None:
            message = f"isolated vertices: {self.vertices}"
        super().__init__(message)


class IsolatedMemberError(IsolatedVertexError):
    """A member of the independent set has no neighbour to connect to."""


class UncoverableError(UDGDomError):
    """The subset family does not cover the universe."""


class SizeLimitError(UDGDomError):
    """Instance is larger than the configured limit of an exponential search."""

    def __init__(self, size, limit, what="instance"):
        self.size = size
        self.limit = limit
        super().__init__(f"{what} size {size} exceeds limit {limit}")


class NotDominatingError(UDGDomError):
    """A vertex set fails to dominate the graph."""


class InvalidAssignmentError(UDGDomError):
    """A labelling is not a total Roman dominating function."""


class RetryExhaustedError(UDGDomError):
    """Random generation could not produce an acceptable instance."""
