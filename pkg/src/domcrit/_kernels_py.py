"""Pure-Python reference implementations of the hot search kernels.

Drop-in replacements for the jitted backend: every function accepts the same
numpy ``uint64`` adjacency buffers and returns the same types, so callers can
switch backends without touching call sites (set ``DOMCRIT_BACKEND=python``).
These are the readable reference versions; the jitted twins must match them
bit for bit, including witness choice and canonical labelings.
"""

from __future__ import annotations

import numpy as np


def gamma_search(n: int, closed: np.ndarray) -> tuple[int, int]:
    """Exact domination number via staged branch and bound.

    ``closed[v]`` is the closed-neighborhood bitmask of vertex v.  Stages try
    target sizes k from ceil(n / (max|N[v]|)) upward; within a stage the
    branch vertex is the lowest-index undominated vertex and candidates from
    its closed neighborhood are tried in increasing index, so the returned
    witness mask is deterministic.  Returns (gamma, witness_mask).
    """
    if n == 0:
        return 0, 0
    masks = [int(x) for x in closed]
    full = (1 << n) - 1
    deltap1 = max(m.bit_count() for m in masks)
    lower = -(-n // deltap1)
    for k in range(lower, n + 1):
        if k * deltap1 < n:
            continue
        witness = _stage(masks, full, k, deltap1)
        if witness >= 0:
            return k, witness
    return n, full


def _stage(masks: list[int], full: int, k: int, deltap1: int) -> int:
    # Iterative DFS; returns a witness mask or -1 when no dominating set of
    # size <= k exists.
    dom = [0] * (k + 1)
    cand = [0] * (k + 1)
    chosen = [0] * (k + 1)
    cand[0] = masks[0]  # lowest undominated vertex of the empty set is 0
    depth = 0
    while depth >= 0:
        if cand[depth] == 0:
            depth -= 1
            continue
        low = cand[depth] & -cand[depth]
        cand[depth] ^= low
        u = low.bit_length() - 1
        chosen[depth] = u
        newdom = dom[depth] | masks[u]
        if newdom == full:
            out = 0
            for i in range(depth + 1):
                out |= 1 << chosen[i]
            return out
        if depth + 1 == k:
            continue
        undom = full & ~newdom
        if (k - depth - 1) * deltap1 < undom.bit_count():
            continue
        depth += 1
        dom[depth] = newdom
        v = (undom & -undom).bit_length() - 1
        cand[depth] = masks[v]
    return -1


def gamma_brute(n: int, closed: np.ndarray) -> int:
    """Plain minimum over all 2**n subsets; the independent oracle."""
    if n == 0:
        return 0
    masks = [int(x) for x in closed]
    full = (1 << n) - 1
    best = n
    for s in range(1 << n):
        if s.bit_count() >= best:
            continue
        cover = 0
        m = s
        while m:
            low = m & -m
            cover |= masks[low.bit_length() - 1]
            m ^= low
        if cover == full:
            best = s.bit_count()
    return best


def canon_cols(n: int, adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Canonical labeling by exact lexicographic minimization.

    The canonical string of a labeling reads the upper-triangle adjacency
    bits column by column; placing one vertex per position appends one
    column, so a depth-first search over partial labelings can compare
    prefixes against the best complete labeling found and cut every branch
    that can no longer improve it.  Candidates at each level are ordered by
    (column value, vertex), which makes the search explore near-minimal
    labelings first and leaves only automorphism-induced ties to walk.

    Returns (cols, perm): ``cols[p]`` holds column p of the canonical
    adjacency matrix as an integer (bit for row i at shift p-1-i) and
    ``perm[p]`` is the original vertex placed at canonical position p.
    """
    if n == 0:
        return np.zeros(0, np.uint64), np.zeros(0, np.int64)
    rows = [int(x) for x in adj]
    cols = [(1 << p) - 1 for p in range(n)]
    perm = [0] * n
    best_perm = list(range(n))
    used = 0
    cand: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    ptr = [0] * n
    cand[0] = [(0, v) for v in range(n)]
    level = 0
    while True:
        if ptr[level] < len(cand[level]):
            col, v = cand[level][ptr[level]]
            ptr[level] += 1
            if col > cols[level]:
                ptr[level] = len(cand[level])  # sorted: the rest is worse
                continue
            if col < cols[level]:
                cols[level] = col
                for q in range(level + 1, n):
                    cols[q] = (1 << q) - 1
            if level == n - 1:
                perm[level] = v
                best_perm = perm.copy()
                continue
            perm[level] = v
            used |= 1 << v
            level += 1
            nxt = []
            for w in range(n):
                if used >> w & 1:
                    continue
                c = 0
                for i in range(level):
                    c = (c << 1) | (rows[perm[i]] >> w & 1)
                nxt.append((c, w))
            nxt.sort()
            cand[level] = nxt
            ptr[level] = 0
        else:
            level -= 1
            if level < 0:
                break
            used &= ~(1 << perm[level])
    return np.array(cols, np.uint64), np.array(best_perm, np.int64)


def extend_canon(parent_n: int, parent_adj: np.ndarray) -> np.ndarray:
    """Canonical column keys for every one-vertex extension of a graph.

    Row ``mask`` of the result is ``canon_cols`` of the parent plus a new
    vertex whose neighborhood is ``mask``.  Used by the non-isomorphic
    atlas builder, where batching the 2**parent_n children into one call is
    what the jitted backend exploits.
    """
    n = parent_n + 1
    out = np.zeros((1 << parent_n, n), np.uint64)
    base = [int(x) for x in parent_adj]
    adj = np.zeros(n, np.uint64)
    for mask in range(1 << parent_n):
        for i in range(parent_n):
            if mask >> i & 1:
                adj[i] = np.uint64(base[i] | (1 << parent_n))
            else:
                adj[i] = np.uint64(base[i])
        adj[parent_n] = np.uint64(mask)
        cols, _ = canon_cols(n, adj)
        out[mask, :] = cols
    return out
