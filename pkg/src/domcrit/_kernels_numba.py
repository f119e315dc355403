"""Jitted twins of the search kernels; the default backend.

Must stay behaviorally identical to ``_kernels_py``: same staged search
order, same witness, same canonical labeling.  All bit work is done on
``uint64`` with explicit numpy scalar constants because numba's integer
unification rules differ from CPython's.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_U0 = np.uint64(0)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ALL = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return np.int64((x * _H01) >> _U56)


@njit(cache=True, inline="always")
def _ctz(x):
    # lowest set bit index; caller guarantees x != 0
    return _popcount((x & (~x + _U1)) - _U1)


@njit(cache=True)
def _stage(masks, full, k, deltap1):
    dom = np.zeros(k + 1, np.uint64)
    cand = np.zeros(k + 1, np.uint64)
    chosen = np.zeros(k + 1, np.int64)
    cand[0] = masks[0]
    depth = 0
    while depth >= 0:
        if cand[depth] == _U0:
            depth -= 1
            continue
        c = cand[depth]
        low = c & (~c + _U1)
        cand[depth] = c ^ low
        u = _ctz(low)
        chosen[depth] = u
        newdom = dom[depth] | masks[u]
        if newdom == full:
            out = _U0
            for i in range(depth + 1):
                out |= _U1 << np.uint64(chosen[i])
            return np.int64(out)
        if depth + 1 == k:
            continue
        undom = full & ~newdom
        if (k - depth - 1) * deltap1 < _popcount(undom):
            continue
        depth += 1
        dom[depth] = newdom
        v = _ctz(undom)
        cand[depth] = masks[v]
    return np.int64(-1)


@njit(cache=True)
def _gamma_search(n, closed):
    if n == 0:
        return np.int64(0), np.int64(0)
    full = _ALL >> np.uint64(64 - n)
    deltap1 = np.int64(0)
    for v in range(n):
        p = _popcount(closed[v])
        if p > deltap1:
            deltap1 = p
    lower = (n + deltap1 - 1) // deltap1
    for k in range(lower, n + 1):
        if k * deltap1 < n:
            continue
        witness = _stage(closed, full, k, deltap1)
        if witness >= 0:
            return np.int64(k), witness
    return np.int64(n), np.int64(full)


@njit(cache=True)
def _gamma_brute(n, closed):
    if n == 0:
        return np.int64(0)
    full = _ALL >> np.uint64(64 - n)
    best = np.int64(n)
    for s in range(1 << n):
        su = np.uint64(s)
        if _popcount(su) >= best:
            continue
        cover = _U0
        m = su
        while m != _U0:
            low = m & (~m + _U1)
            cover |= closed[_ctz(low)]
            m ^= low
        if cover == full:
            best = _popcount(su)
    return best


@njit(cache=True)
def _canon_cols(n, adj, cols, perm_best):
    if n == 0:
        return
    for p in range(n):
        cols[p] = (_U1 << np.uint64(p)) - _U1
    perm = np.zeros(n, np.int64)
    for p in range(n):
        perm_best[p] = p
    used = _U0
    cand_c = np.zeros((n, n), np.uint64)
    cand_v = np.zeros((n, n), np.int64)
    cand_len = np.zeros(n, np.int64)
    cand_ptr = np.zeros(n, np.int64)
    for v in range(n):
        cand_c[0, v] = _U0
        cand_v[0, v] = v
    cand_len[0] = n
    cand_ptr[0] = 0
    level = 0
    while True:
        if cand_ptr[level] < cand_len[level]:
            i = cand_ptr[level]
            cand_ptr[level] += 1
            col = cand_c[level, i]
            v = cand_v[level, i]
            if col > cols[level]:
                cand_ptr[level] = cand_len[level]
                continue
            if col < cols[level]:
                cols[level] = col
                for q in range(level + 1, n):
                    cols[q] = (_U1 << np.uint64(q)) - _U1
            if level == n - 1:
                perm[level] = v
                for p in range(n):
                    perm_best[p] = perm[p]
                continue
            perm[level] = v
            used |= _U1 << np.uint64(v)
            level += 1
            cnt = 0
            for w in range(n):
                if (used >> np.uint64(w)) & _U1 != _U0:
                    continue
                c = _U0
                for j in range(level):
                    c = (c << _U1) | ((adj[perm[j]] >> np.uint64(w)) & _U1)
                cand_c[level, cnt] = c
                cand_v[level, cnt] = w
                cnt += 1
            # insertion sort by (column, vertex); vertex order is already
            # ascending from the scan, so sorting by column alone is stable
            for a in range(1, cnt):
                ck = cand_c[level, a]
                vk = cand_v[level, a]
                b = a - 1
                while b >= 0 and cand_c[level, b] > ck:
                    cand_c[level, b + 1] = cand_c[level, b]
                    cand_v[level, b + 1] = cand_v[level, b]
                    b -= 1
                cand_c[level, b + 1] = ck
                cand_v[level, b + 1] = vk
            cand_len[level] = cnt
            cand_ptr[level] = 0
        else:
            level -= 1
            if level < 0:
                break
            used &= ~(_U1 << np.uint64(perm[level]))


@njit(cache=True)
def _extend_canon(parent_n, parent_adj, out):
    n = parent_n + 1
    adj = np.zeros(n, np.uint64)
    cols = np.zeros(n, np.uint64)
    perm = np.zeros(n, np.int64)
    newbit = _U1 << np.uint64(parent_n)
    for mask in range(1 << parent_n):
        mu = np.uint64(mask)
        for i in range(parent_n):
            if (mu >> np.uint64(i)) & _U1 != _U0:
                adj[i] = parent_adj[i] | newbit
            else:
                adj[i] = parent_adj[i]
        adj[parent_n] = mu
        _canon_cols(n, adj, cols, perm)
        for p in range(n):
            out[mask, p] = cols[p]


def gamma_search(n: int, closed: np.ndarray) -> tuple[int, int]:
    k, witness = _gamma_search(n, np.ascontiguousarray(closed, np.uint64))
    return int(k), int(witness)


def gamma_brute(n: int, closed: np.ndarray) -> int:
    return int(_gamma_brute(n, np.ascontiguousarray(closed, np.uint64)))


def canon_cols(n: int, adj: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    cols = np.zeros(n, np.uint64)
    perm = np.zeros(n, np.int64)
    _canon_cols(n, np.ascontiguousarray(adj, np.uint64), cols, perm)
    return cols, perm


def extend_canon(parent_n: int, parent_adj: np.ndarray) -> np.ndarray:
    out = np.zeros((1 << parent_n, parent_n + 1), np.uint64)
    _extend_canon(parent_n, np.ascontiguousarray(parent_adj, np.uint64), out)
    return out
