"""Estimator-style wrapper: fit on an edge array, partial_fit on events.

Mirrors the scikit-learn parameter protocol (get_params / set_params,
trailing-underscore fitted attributes) without importing scikit-learn, so
the engine drops into pipelines and grid-search style tooling unchanged.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .closeness import CentralityState
from .engine import EngineConfig, EngineState, process_stream
from .errors import VertexIdError
from .graph import DynamicGraph
from .io import EdgeEvent

__all__ = ["ClosenessCentrality", "check_edge_array"]


def check_edge_array(X, n_vertices: int | None = None) -> np.ndarray:
    """Validate an (m, 2) integer edge array; returns it as int64."""
    arr = np.asarray(X)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (m, 2) edge array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if np.issubdtype(arr.dtype, np.floating) and np.all(arr == np.floor(arr)):
            arr = arr.astype(np.int64)
        else:
            raise ValueError("edge array must contain integers")
    arr = arr.astype(np.int64, copy=False)
    if arr.size and arr.min() < 0:
        raise VertexIdError("vertex ids must be non-negative")
    if n_vertices is not None and arr.size and arr.max() >= n_vertices:
        raise VertexIdError(
            f"vertex id {int(arr.max())} out of range for n_vertices={n_vertices}"
        )
    return arr


class ClosenessCentrality:
    """Exact closeness centrality with incremental updates.

    Parameters follow the engine configuration flags; `config` names a
    preset ("cc", "b", "bl", "bli", "blih") and individual flags are
    exposed through get_params/set_params as that preset's expansion.

    Attributes after fit: closeness_, farness_, n_vertices_.
    """

    def __init__(
        self,
        config: str = "blih",
        alpha: float = 1.0,
        threads: int = 1,
    ):
        self.config = config
        self.alpha = alpha
        self.threads = threads

    # -- sklearn parameter protocol --

    def get_params(self, deep: bool = True) -> dict:
        return {"config": self.config, "alpha": self.alpha, "threads": self.threads}

    def set_params(self, **params) -> "ClosenessCentrality":
        for key, value in params.items():
            if key not in self.get_params():
                raise ValueError(f"invalid parameter {key!r}")
            setattr(self, key, value)
        return self

    # -- fitting --

    def _cfg(self) -> EngineConfig:
        return EngineConfig.from_name(self.config, alpha=self.alpha, threads=self.threads)

    def fit(self, X, y=None, n_vertices: int | None = None) -> "ClosenessCentrality":
        """Build the graph from an (m, 2) edge array and compute closeness.

        n_vertices overrides the default max-id-plus-one vertex count."""
        edges = check_edge_array(X, n_vertices)
        n = n_vertices if n_vertices is not None else (
            int(edges.max()) + 1 if edges.size else 0
        )
        g = DynamicGraph.from_edges(n, [tuple(e) for e in edges])
        self._state = EngineState.initialize(g, self._cfg())
        return self

    def partial_fit(self, events: Iterable[EdgeEvent] | Sequence) -> "ClosenessCentrality":
        """Apply edge events incrementally. Accepts EdgeEvents or
        (op, u, v) tuples with op one of "insert", "delete", "+", "-";
        fits an empty graph if needed."""
        if not hasattr(self, "_state"):
            self._state = EngineState.initialize(DynamicGraph.from_edges(0, []), self._cfg())
        signs = {"+": "insert", "-": "delete"}
        evs = [
            ev
            if isinstance(ev, EdgeEvent)
            else EdgeEvent(signs.get(ev[0], ev[0]), int(ev[1]), int(ev[2]))
            for ev in events
        ]
        process_stream(self._state, evs, self._cfg())
        return self

    def transform(self, X=None) -> np.ndarray:
        """Closeness per vertex as an (n,) float array."""
        self._check_fitted()
        return self.closeness_.copy()

    def fit_transform(self, X, y=None, **kw) -> np.ndarray:
        return self.fit(X, y, **kw).transform()

    def predict(self, vertices) -> np.ndarray:
        """Closeness for the given vertex ids."""
        self._check_fitted()
        idx = np.asarray(vertices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.n_vertices_):
            raise VertexIdError("vertex id out of range")
        return self.closeness_[idx]

    # -- fitted attributes --

    def _check_fitted(self) -> None:
        if not hasattr(self, "_state"):
            raise RuntimeError("estimator is not fitted; call fit or partial_fit first")

    @property
    def state_(self) -> CentralityState:
        self._check_fitted()
        return self._state.centrality

    @property
    def closeness_(self) -> np.ndarray:
        return self.state_.cc

    @property
    def farness_(self) -> np.ndarray:
        self._check_fitted()
        return self._state.centrality.far.copy()

    @property
    def n_vertices_(self) -> int:
        self._check_fitted()
        return self._state.graph.n

    @property
    def graph_(self) -> DynamicGraph:
        self._check_fitted()
        return self._state.graph
