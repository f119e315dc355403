"""Independent oracles and hypothesis strategies for the test suite.

Everything here is deliberately implemented without the package's kernels or
bitset tricks, so that agreement between these oracles and the library is a
meaningful check rather than the same code twice.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from hypothesis import strategies as st

from domcrit.graph import Graph


# -- domination oracle (sets and itertools only) -----------------------------


def oracle_gamma(g: Graph) -> int:
    """Minimum dominating set size by checking subsets in increasing size."""
    closed = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    everything = set(range(g.n))
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if set().union(*(closed[v] for v in combo), set()) >= everything:
                return k
    return g.n


def oracle_all_gamma_sets(g: Graph) -> list[tuple[int, ...]]:
    k = oracle_gamma(g)
    closed = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    everything = set(range(g.n))
    return [
        combo
        for combo in itertools.combinations(range(g.n), k)
        if set().union(*(closed[v] for v in combo), set()) >= everything
    ]


# -- counting oracle: cycle index of the pair action --------------------------


def _partitions(n: int, largest: int | None = None):
    if n == 0:
        yield ()
        return
    largest = n if largest is None else min(largest, n)
    for first in range(largest, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def burnside_graph_count(n: int) -> int:
    """Non-isomorphic simple graphs on n vertices, by summing over cycle
    types of the vertex permutation: each permutation fixes 2**(cycles of the
    induced action on unordered pairs) graphs."""
    if n == 0:
        return 1
    total = Fraction(0)
    for lam in _partitions(n):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = 1
        for size, a in mult.items():
            z *= size**a * math.factorial(a)
        pair_cycles = sum(a * (size // 2) for size, a in mult.items())
        pair_cycles += sum(
            math.comb(a, 2) * size for size, a in mult.items()
        )
        sizes = sorted(mult)
        for i, si in enumerate(sizes):
            for sj in sizes[i + 1 :]:
                pair_cycles += mult[si] * mult[sj] * math.gcd(si, sj)
        total += Fraction(2**pair_cycles, z)
    assert total.denominator == 1
    return int(total)


def inverse_euler_transform(totals: list[int]) -> list[int]:
    """Connected counts from total counts: if the totals are the Euler
    transform of the connected counts, recover the latter.  totals[0] must
    be 1 (the empty graph)."""
    n_max = len(totals) - 1
    aux = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        aux[n] = n * totals[n] - sum(
            aux[k] * totals[n - k] for k in range(1, n)
        )
    conn = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = 0
        for d in range(1, n + 1):
            if n % d == 0:
                acc += _mobius(n // d) * aux[d]
        assert acc % n == 0
        conn[n] = acc // n
    return conn


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


# -- hypothesis strategies -----------------------------------------------------


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    nbits = n * (n - 1) // 2
    mask = draw(st.integers(min_value=0, max_value=(1 << nbits) - 1)) if nbits else 0
    edges = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> idx & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


@st.composite
def permutations_of(draw, n: int) -> list[int]:
    return draw(st.permutations(list(range(n))))
