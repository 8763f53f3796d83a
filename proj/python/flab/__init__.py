"""Algebraic BFS kernels over masked submatrices."""

from ._flab import (
    UNREACHED,
    BfsResult,
    Graph,
    KernelRun,
    bfs,
    bfs_levels,
    from_edges,
    load_cache,
    load_text,
    random_gnp,
    stats,
)

__all__ = [
    "UNREACHED",
    "BfsResult",
    "Graph",
    "KernelRun",
    "bfs",
    "bfs_levels",
    "from_edges",
    "load_cache",
    "load_text",
    "random_gnp",
    "stats",
]
