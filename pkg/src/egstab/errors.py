"""Exception types shared across the package."""


class EgstabError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(EgstabError, ValueError):
    """An operation was called outside its documented domain."""


class EdgeNotFoundError(PreconditionError):
    pass


class VertexIndexError(PreconditionError, IndexError):
    pass


class SearchLimitError(PreconditionError):
    """The input exceeds a configured exact-search limit."""


class GraphFormatError(EgstabError, ValueError):
    """Malformed serialized graph. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph6HeaderError(GraphFormatError):
    pass


class Graph6LengthError(GraphFormatError):
    """Too few or too many data bytes after the header."""


class Graph6SizeError(GraphFormatError):
    """Vertex count above the 64-vertex cap."""


class EdgeListError(GraphFormatError):
    pass


class DuplicateEdgeError(EdgeListError):
    pass


class LoopError(EdgeListError):
    pass


class EdgeIndexError(EdgeListError):
    pass


class InvariantViolation(EgstabError, RuntimeError):
    """A library invariant backed by a published theorem failed.

    On valid inputs this means either an implementation bug or a
    counterexample to the theorem; it is never silently swallowed.
    """


class ProcedureInvariantError(InvariantViolation):
    """A contraction procedure left its guaranteed invariants mid-run."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
