"""Streams of pairwise non-isomorphic graphs, plus seeded random samplers.

The atlas of order n comes from extending every atlas graph of order n-1 by
one new vertex with every possible neighborhood, keeping one representative
per canonical form.  Every n-vertex graph minus its last vertex is some
(n-1)-vertex graph, so the extension sweep is exhaustive.  Orders are capped
at 10: the order-10 atlas is ~12M graphs and past that this representation
is the wrong tool.
"""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np

from . import kernels
from .graph import Graph, is_connected
from .iso import graph_from_cols

ATLAS_MAX_ORDER = 10


@lru_cache(maxsize=None)
def _atlas_cols(n: int) -> np.ndarray:
    """Canonical column keys of all non-isomorphic graphs of order n,
    lexicographically sorted, one row per graph."""
    if n < 0 or n > ATLAS_MAX_ORDER:
        raise ValueError(f"atlas supports orders 0..{ATLAS_MAX_ORDER}, got {n}")
    if n == 0:
        return np.zeros((1, 0), np.uint64)
    parents = _atlas_cols(n - 1)
    seen: set[bytes] = set()
    for row in parents:
        parent = graph_from_cols(n - 1, row)
        keys = kernels.extend_canon(n - 1, parent.adj_array())
        for i in range(keys.shape[0]):
            seen.add(keys[i].tobytes())
    out = np.zeros((len(seen), n), np.uint64)
    for i, key in enumerate(sorted(seen)):
        out[i] = np.frombuffer(key, np.uint64)
    return out


def count_graphs(n: int) -> int:
    """Number of pairwise non-isomorphic graphs of order n."""
    return _atlas_cols(n).shape[0]


def graphs_of_order(n: int, *, connected_only: bool = False):
    """Yield one representative per isomorphism class of order n, in
    canonical-key order.  Representatives are canonically labeled."""
    for row in _atlas_cols(n):
        g = graph_from_cols(n, row)
        if connected_only and not is_connected(g):
            continue
        yield g


def graphs_up_to(n_max: int, *, connected_only: bool = False):
    """All atlas graphs of orders 1..n_max in (order, canonical key) order."""
    for n in range(1, n_max + 1):
        yield from graphs_of_order(n, connected_only=connected_only)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Erdos-Renyi draw from the given generator (deterministic per seed)."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Rejection-sample G(n, p) until connected; p should not be tiny."""
    if n == 0:
        return Graph(0)
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g
