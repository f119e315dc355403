"""Immutable bitset-backed simple undirected graphs and their basic operations.

Vertices are the integers 0..n-1 and each vertex stores its neighborhood as
one 64-bit mask, which caps the order at 64 but turns neighborhood algebra
into single-word operations.  Graph values never mutate after construction,
so they are safe to hash, share, and ship between processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64

#: vertex handle; plain int index into 0..n-1
VertexId = int

#: distance marker for vertex pairs in different components
INFINITY = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph with per-vertex neighbor bitmasks."""

    __slots__ = ("n", "adj", "_adj_arr", "_closed_arr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"order must be between 0 and {MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._adj_arr = None
        self._closed_arr = None

    @classmethod
    def from_adj(cls, n: int, masks: Sequence[int]) -> "Graph":
        """Build from raw adjacency masks, validating the representation."""
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"order must be between 0 and {MAX_VERTICES}, got {n}")
        if len(masks) != n:
            raise ValueError("need one mask per vertex")
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"mask of vertex {v} has bits beyond vertex {n - 1}")
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(int(m) for m in masks)
        g._adj_arr = None
        g._closed_arr = None
        return g

    # -- cheap accessors -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    # -- kernel buffers ---------------------------------------------------

    def adj_array(self) -> np.ndarray:
        if self._adj_arr is None:
            self._adj_arr = np.array(self.adj, np.uint64)
        return self._adj_arr

    def closed_array(self) -> np.ndarray:
        if self._closed_arr is None:
            self._closed_arr = np.array(
                [m | 1 << v for v, m in enumerate(self.adj)], np.uint64
            )
        return self._closed_arr

    # -- value semantics --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class VertexDeletion:
    """Induced subgraph together with the relabeling it applied.

    ``kept[i]`` is the original label of new vertex i; ``old_to_new`` maps
    every surviving original label to its new one.
    """

    graph: Graph
    kept: tuple[int, ...]

    @property
    def old_to_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.kept)}


@dataclass(frozen=True)
class CoalescenceResult:
    """Two graphs glued at one vertex, with both embedding maps.

    ``map1[v]``/``map2[v]`` give the new label of vertex v of the first and
    second operand; both attach vertices land on ``merged_vertex`` and all
    other images are distinct.
    """

    graph: Graph
    merged_vertex: VertexId
    map1: tuple[int, ...]
    map2: tuple[int, ...]


# -- constructions ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    g = Graph(n)
    full = (1 << n) - 1
    return Graph.from_adj(n, [full & ~(1 << v) for v in range(n)]) if n else g


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_adj(g.n, [full & ~m & ~(1 << v) for v, m in enumerate(g.adj)])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    total = sum(g.n for g in gs)
    if total > MAX_VERTICES:
        raise ValueError(f"union order {total} exceeds {MAX_VERTICES}")
    masks: list[int] = []
    offset = 0
    for g in gs:
        masks.extend(m << offset for m in g.adj)
        offset += g.n
    return Graph.from_adj(total, masks)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a permutation: new vertex perm[v] takes the role of old v."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    masks = [0] * g.n
    for v, m in enumerate(g.adj):
        for u in bits(m):
            masks[perm[v]] |= 1 << perm[u]
    return Graph.from_adj(g.n, masks)


def delete_vertices(g: Graph, xs: Iterable[int]) -> VertexDeletion:
    """Induced subgraph on the complement of ``xs``, relabeled order-preservingly."""
    drop = 0
    for x in xs:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range for order {g.n}")
        drop |= 1 << x
    kept = [v for v in range(g.n) if not drop >> v & 1]
    pos = {old: new for new, old in enumerate(kept)}
    masks = [0] * len(kept)
    for new, old in enumerate(kept):
        for u in bits(g.adj[old] & ~drop):
            masks[new] |= 1 << pos[u]
    return VertexDeletion(Graph.from_adj(len(kept), masks), tuple(kept))


def with_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append one vertex adjacent to ``neighbors``; the new vertex gets label n."""
    if g.n + 1 > MAX_VERTICES:
        raise ValueError(f"order {g.n + 1} exceeds {MAX_VERTICES}")
    nb = mask_of(neighbors)
    if nb >> g.n:
        raise ValueError("neighbor out of range")
    masks = [m | ((nb >> v & 1) << g.n) for v, m in enumerate(g.adj)]
    masks.append(nb)
    return Graph.from_adj(g.n + 1, masks)


def with_edge(g: Graph, u: int, v: int) -> Graph:
    masks = list(g.adj)
    if u == v:
        raise ValueError("loop not allowed")
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph.from_adj(g.n, masks)


def coalesce(h1: Graph, x1: int, h2: Graph, x2: int) -> CoalescenceResult:
    """Identify x1 of h1 with x2 of h2 into a single vertex.

    The first operand keeps its labels; the second operand's remaining
    vertices are appended in increasing order.  The merged vertex inherits
    both neighborhoods.
    """
    if not 0 <= x1 < h1.n:
        raise ValueError(f"vertex {x1} out of range for order {h1.n}")
    if not 0 <= x2 < h2.n:
        raise ValueError(f"vertex {x2} out of range for order {h2.n}")
    n = h1.n + h2.n - 1
    if n > MAX_VERTICES:
        raise ValueError(f"coalescence order {n} exceeds {MAX_VERTICES}")
    map1 = tuple(range(h1.n))
    map2_list = []
    nxt = h1.n
    for v in range(h2.n):
        if v == x2:
            map2_list.append(x1)
        else:
            map2_list.append(nxt)
            nxt += 1
    map2 = tuple(map2_list)
    masks = [0] * n
    for v in range(h1.n):
        for u in bits(h1.adj[v]):
            masks[v] |= 1 << u
    for v in range(h2.n):
        for u in bits(h2.adj[v]):
            masks[map2[v]] |= 1 << map2[u]
    return CoalescenceResult(Graph.from_adj(n, masks), x1, map1, map2)


# -- metrics ----------------------------------------------------------------


def _bfs_layer_masks(g: Graph, x: int) -> list[int]:
    seen = 1 << x
    layers = [seen]
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    return layers


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path edge count, or INFINITY across components."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    if u == v:
        return 0
    for d, layer in enumerate(_bfs_layer_masks(g, u)):
        if layer >> v & 1:
            return d
    return INFINITY


def distance_layer(g: Graph, x: int, i: int) -> tuple[int, ...]:
    """Vertices at distance exactly i from x; layer 0 is (x,)."""
    if not 0 <= x < g.n:
        raise ValueError("vertex out of range")
    layers = _bfs_layer_masks(g, x)
    if i < 0 or i >= len(layers):
        return ()
    return tuple(bits(layers[i]))


def eccentricity(g: Graph, x: int) -> int | float:
    layers = _bfs_layer_masks(g, x)
    reached = 0
    for m in layers:
        reached |= m
    if reached != (1 << g.n) - 1:
        return INFINITY
    return len(layers) - 1


def diameter(g: Graph) -> int | float:
    """Maximum pairwise distance; 0 for n <= 1, INFINITY when disconnected."""
    if g.n <= 1:
        return 0
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e is INFINITY or e == INFINITY:
            return INFINITY
        best = max(best, e)
    return best


def diametrical_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose eccentricity attains the diameter; connected input only."""
    if not is_connected(g):
        raise ValueError("diametrical vertices are defined for connected graphs")
    if g.n == 0:
        return ()
    d = diameter(g)
    return tuple(v for v in range(g.n) if eccentricity(g, v) == d)


# -- connectivity ------------------------------------------------------------


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    """True when there is at most one component (empty graph included)."""
    if g.n <= 1:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1


def cut_vertices(g: Graph) -> tuple[int, ...]:
    cuts, _ = _blocks_and_cuts(g)
    return cuts


def blocks(g: Graph) -> list[tuple[int, ...]]:
    _, blks = _blocks_and_cuts(g)
    return blks


def _blocks_and_cuts(g: Graph) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Articulation points and biconnected components of a connected graph."""
    if not is_connected(g):
        raise ValueError("blocks and cut vertices are defined for connected graphs")
    n = g.n
    if n == 0:
        return (), []
    if n == 1:
        return (), [(0,)]
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    cuts: set[int] = set()
    blocks_out: list[tuple[int, ...]] = []
    counter = [0]

    def collect(u: int, v: int) -> None:
        members = 0
        while edge_stack:
            a, b = edge_stack.pop()
            members |= 1 << a | 1 << b
            if (a, b) == (u, v):
                break
        blocks_out.append(tuple(bits(members)))

    def dfs(u: int, parent: int) -> None:
        disc[u] = low[u] = counter[0]
        counter[0] += 1
        children = 0
        for v in bits(g.adj[u]):
            if disc[v] == -1:
                edge_stack.append((u, v))
                children += 1
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if parent != -1:
                        cuts.add(u)
                    collect(u, v)
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])
        if parent == -1 and children >= 2:
            cuts.add(u)

    dfs(0, -1)
    blocks_out.sort(key=lambda b: (b[0], len(b), b))
    return tuple(sorted(cuts)), blocks_out
