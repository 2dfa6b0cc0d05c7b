"""Exception types raised by the graph store, parsers, and engine."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for graph mutation and lookup errors."""


class SelfLoopError(GraphError):
    """Edge endpoints are equal; the graph is simple."""


class DuplicateEdgeError(GraphError):
    """Edge already present."""


class MissingEdgeError(GraphError):
    """Edge not present."""


class VertexIdError(GraphError):
    """Vertex id out of range (new ids must extend the graph by one)."""


class InputError(ValueError):
    """Base class for file parsing errors."""


class MalformedLineError(InputError):
    def __init__(self, line_no: int, line: str, reason: str = "malformed line"):
        self.line_no = line_no
        self.line = line
        super().__init__(f"line {line_no}: {reason}: {line!r}")


class DecreasingTimestampError(InputError):
    def __init__(self, line_no: int, previous: float, current: float):
        self.line_no = line_no
        super().__init__(
            f"line {line_no}: timestamp {current} decreases below {previous}"
        )


class InsufficientNonBridgeEdgesError(InputError):
    """The graph ran out of non-bridge edges before k removals."""


class EventError(RuntimeError):
    """An event in a stream failed; carries the zero-based event index."""

    def __init__(self, index: int, cause: Exception):
        self.index = index
        self.cause = cause
        super().__init__(f"event {index}: {cause}")


class VerificationError(RuntimeError):
    """Maintained values diverged from the from-scratch reference."""
