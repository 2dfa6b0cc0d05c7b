"""Exact closeness centrality on dynamic graphs.

Maintains every vertex's closeness under streaming edge insertions and
deletions, doing far less work than recomputing: updates are scoped to one
biconnected component, filtered by BFS level differences, deduplicated
across identical vertices, and run through a direction-switching BFS.
Results are exact (integer farness) for every configuration.
"""

from .closeness import CentralityState, closeness_all, closeness_single
from .engine import (
    EngineConfig,
    EngineState,
    UpdateReport,
    delete_and_update,
    insert_and_update,
    process_stream,
)
from .errors import (
    DecreasingTimestampError,
    DuplicateEdgeError,
    EventError,
    GraphError,
    InputError,
    InsufficientNonBridgeEdgesError,
    MalformedLineError,
    MissingEdgeError,
    SelfLoopError,
    VerificationError,
    VertexIdError,
)
from .estimator import ClosenessCentrality
from .graph import UNREACHABLE, DynamicGraph, sssp_distances
from .io import EdgeEvent, StatsBundle, parse_edge_list, parse_event_stream

__version__ = "0.1.0"

__all__ = [
    "CentralityState",
    "ClosenessCentrality",
    "DynamicGraph",
    "EdgeEvent",
    "EngineConfig",
    "EngineState",
    "StatsBundle",
    "UNREACHABLE",
    "UpdateReport",
    "closeness_all",
    "closeness_single",
    "delete_and_update",
    "insert_and_update",
    "parse_edge_list",
    "parse_event_stream",
    "process_stream",
    "sssp_distances",
    "DecreasingTimestampError",
    "DuplicateEdgeError",
    "EventError",
    "GraphError",
    "InputError",
    "InsufficientNonBridgeEdgesError",
    "MalformedLineError",
    "MissingEdgeError",
    "SelfLoopError",
    "VerificationError",
    "VertexIdError",
    "__version__",
]
