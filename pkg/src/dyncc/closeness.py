"""Closeness centrality from scratch.

far[u] is the sum of hop distances from u to every vertex it can reach, kept
as int64 and treated as the source of truth; cc[u] = 1 / far[u] is derived on
demand, with cc[u] = 0 when u reaches nothing (far[u] = 0). Unreachable pairs
contribute nothing, so the values are meaningful on disconnected graphs too.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import DynamicGraph, _mode_code
from .errors import VertexIdError

__all__ = [
    "CentralityState",
    "closeness_all",
    "closeness_single",
    "farness_from_distances",
]


@dataclass
class CentralityState:
    """Per-vertex farness (exact int64) with closeness derived as 1/far."""

    far: np.ndarray

    @property
    def cc(self) -> np.ndarray:
        out = np.zeros(self.far.shape[0], dtype=np.float64)
        np.divide(1.0, self.far, out=out, where=self.far > 0)
        return out

    def copy(self) -> "CentralityState":
        return CentralityState(self.far.copy())


def farness_from_distances(dist: np.ndarray) -> int:
    """Sum of finite distances; the -1 sentinel and the source's 0 drop out."""
    return int(dist[dist > 0].sum())


def closeness_all(
    g: DynamicGraph,
    mode: str = "top_down",
    alpha: float = 1.0,
    threads: int = 1,
) -> CentralityState:
    """One SSSP per vertex. Results are identical for every mode and thread
    count; only wall-clock differs."""
    code = _mode_code(mode)
    n = g.n
    far = np.zeros(n, dtype=np.int64)
    if n == 0:
        return CentralityState(far)
    indptr, indices = g.csr()
    wr, wrf = g.unit_weights()
    sources = np.arange(n, dtype=np.int64)
    if threads <= 1 or n < 2 * threads:
        _kernels.far_sweep(indptr, indices, n, sources, code, float(alpha), wr, wrf, far)
    else:
        chunks = np.array_split(sources, threads)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = []
            lo = 0
            for chunk in chunks:
                hi = lo + chunk.shape[0]
                futures.append(
                    pool.submit(
                        _kernels.far_sweep,
                        indptr, indices, n, chunk, code, float(alpha),
                        wr, wrf, far[lo:hi],
                    )
                )
                lo = hi
            for f in futures:
                f.result()
    return CentralityState(far)


def closeness_single(
    g: DynamicGraph, source: int, mode: str = "top_down", alpha: float = 1.0
) -> tuple[int, float]:
    """(far, cc) for one vertex."""
    if not 0 <= source < g.n:
        raise VertexIdError(f"source {source} out of range")
    indptr, indices = g.csr()
    wr, wrf = g.unit_weights()
    _, far = _kernels.sssp_with_far(
        indptr, indices, g.n, source, _mode_code(mode), float(alpha), wr, wrf
    )
    far = int(far)
    return far, (1.0 / far if far > 0 else 0.0)
