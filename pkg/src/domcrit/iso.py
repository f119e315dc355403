"""Isomorphism testing and canonical forms for small graphs.

Two independent routes on purpose: ``are_isomorphic`` backtracks over vertex
bijections with degree and neighbor-degree pruning, while ``canonical_form``
minimizes the adjacency bit string over all labelings (in the kernel
backend).  Cross-checking the two is itself a useful test.  Both are meant
for orders up to roughly 12; the atlas builder pushes the canonical kernel a
little further.
"""

from __future__ import annotations

from .graph import Graph, bits, relabel
from . import kernels


def canonical_key(g: Graph) -> bytes:
    """Compact canonical invariant: the canonical column values, raw."""
    cols, _ = kernels.canon_cols(g.n, g.adj_array())
    return cols.tobytes()


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """perm[p] = original vertex placed at canonical position p."""
    _, perm = kernels.canon_cols(g.n, g.adj_array())
    return tuple(int(v) for v in perm)


def canonical_graph(g: Graph) -> Graph:
    perm = canonical_permutation(g)
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return relabel(g, inverse)


def canonical_form(g: Graph) -> bytes:
    """Order byte plus the packed canonical upper triangle, column-major.

    Equal byte strings characterize isomorphic graphs.
    """
    cols, _ = kernels.canon_cols(g.n, g.adj_array())
    stream = []
    for p in range(1, g.n):
        col = int(cols[p])
        for i in range(p):
            stream.append(col >> (p - 1 - i) & 1)
    packed = bytearray([g.n])
    for i in range(0, len(stream), 8):
        byte = 0
        for b in stream[i : i + 8]:
            byte = byte << 1 | b
        if len(stream) - i < 8:
            byte <<= 8 - (len(stream) - i)
        packed.append(byte)
    return bytes(packed)


def graph_from_cols(n: int, cols) -> Graph:
    """Rebuild a graph from canonical column values (atlas storage format)."""
    masks = [0] * n
    for p in range(1, n):
        col = int(cols[p])
        for i in range(p):
            if col >> (p - 1 - i) & 1:
                masks[i] |= 1 << p
                masks[p] |= 1 << i
    return Graph.from_adj(n, masks)


def _invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    degs = [m.bit_count() for m in g.adj]
    return [
        (degs[v], tuple(sorted(degs[u] for u in bits(g.adj[v]))))
        for v in range(g.n)
    ]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking bijection search, independent of the canonical kernel."""
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    gi, hi = _invariants(g), _invariants(h)
    if sorted(gi) != sorted(hi):
        return False
    n = g.n
    # map g vertices in order of rarest invariant first; ties by index
    freq: dict[tuple, int] = {}
    for inv in gi:
        freq[inv] = freq.get(inv, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[gi[v]], v))
    mapping = [-1] * n  # g vertex -> h vertex
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order[idx]
        for w in range(n):
            if used[w] or gi[u] != hi[w]:
                continue
            ok = True
            for prev in order[:idx]:
                if g.has_edge(u, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                used[w] = True
                if extend(idx + 1):
                    return True
                used[w] = False
                mapping[u] = -1
        return False

    return extend(0)
