"""Exact minimum domination: gamma, witnesses, and full gamma-set enumeration."""

from __future__ import annotations

import itertools
import math
import os
import threading
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .graph import Graph, bits, delete_vertices, mask_of

#: cap on the number of candidate subsets all_gamma_sets may examine
DEFAULT_GAMMA_SET_BUDGET = 10_000_000

_BUDGET_ENV = "DOMCRIT_GAMMA_BUDGET"


class GammaSetBudgetError(Exception):
    """Raised when enumerating all gamma-sets would exceed the budget.

    Enumeration is exact or refused; it never truncates silently.
    """


def gamma_set_budget(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(_BUDGET_ENV)
    if raw:
        return int(raw)
    return DEFAULT_GAMMA_SET_BUDGET


@dataclass(frozen=True)
class DominationResult:
    gamma: int
    witness: tuple[int, ...]
    all_min_sets: Optional[tuple[tuple[int, ...], ...]] = None


class GammaCache:
    """Memo of gamma values keyed by canonical form.

    Safe for concurrent readers; writes are serialized by a lock.  gamma is
    an isomorphism invariant, so deletion-heavy workloads (criticality
    profiles, exhaustive scans) hit the same few canonical classes over and
    over.
    """

    def __init__(self) -> None:
        self._table: dict[bytes, int] = {}
        self._lock = threading.Lock()

    def gamma(self, g: Graph) -> int:
        cols, _ = kernels.canon_cols(g.n, g.adj_array())
        key = cols.tobytes()
        hit = self._table.get(key)
        if hit is not None:
            return hit
        value = _gamma_with_witness(g)[0]
        with self._lock:
            self._table[key] = value
        return value

    def __len__(self) -> int:
        return len(self._table)


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex lies in s or next to a vertex of s."""
    cover = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
        cover |= g.closed_mask(v)
    return cover == (1 << g.n) - 1


def _gamma_with_witness(g: Graph) -> tuple[int, int]:
    # gamma is additive over components, and the solver is fastest on small
    # pieces, so split first.  Witness determinism: components in least-vertex
    # order, solver witness mapped back through the deletion labels.
    from .graph import components  # local import keeps module load order simple

    comps = components(g)
    if len(comps) <= 1:
        return kernels.gamma_search(g.n, g.closed_array())
    total = 0
    witness = 0
    for comp in comps:
        drop = [v for v in range(g.n) if v not in comp]
        sub = delete_vertices(g, drop)
        k, wmask = kernels.gamma_search(sub.graph.n, sub.graph.closed_array())
        total += k
        for v in bits(wmask):
            witness |= 1 << sub.kept[v]
    return total, witness


def domination_number(
    g: Graph, *, include_all_sets: bool = False, budget: Optional[int] = None
) -> DominationResult:
    """Exact gamma with one deterministic minimum dominating set.

    With ``include_all_sets`` the full gamma-set list is attached, subject to
    the enumeration budget.
    """
    k, wmask = _gamma_with_witness(g)
    all_sets = (
        all_gamma_sets(g, budget=budget, gamma_value=k) if include_all_sets else None
    )
    return DominationResult(k, tuple(bits(wmask)), all_sets)


def gamma(g: Graph, *, cache: Optional[GammaCache] = None) -> int:
    """Exact gamma; with a cache, memoized on the canonical form."""
    if cache is not None:
        return cache.gamma(g)
    return _gamma_with_witness(g)[0]


def brute_force_gamma(g: Graph) -> int:
    """Reference oracle: minimum over every subset of V, no pruning, no
    component splitting.  Only sensible for small orders."""
    if g.n > 20:
        raise ValueError("brute force oracle is capped at 20 vertices")
    return kernels.gamma_brute(g.n, g.closed_array())


def all_gamma_sets(
    g: Graph, *, budget: Optional[int] = None, gamma_value: Optional[int] = None
) -> tuple[tuple[int, ...], ...]:
    """Every minimum dominating set, in lexicographic order.

    Refuses with GammaSetBudgetError when C(n, gamma) exceeds the budget
    (env DOMCRIT_GAMMA_BUDGET or the budget argument).
    """
    k = gamma(g) if gamma_value is None else gamma_value
    limit = gamma_set_budget(budget)
    candidates = math.comb(g.n, k)
    if candidates > limit:
        raise GammaSetBudgetError(
            f"enumerating C({g.n},{k}) = {candidates} candidate sets exceeds the "
            f"budget of {limit}"
        )
    closed = [g.closed_mask(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    out = []
    for combo in itertools.combinations(range(g.n), k):
        cover = 0
        for v in combo:
            cover |= closed[v]
        if cover == full:
            out.append(combo)
    return tuple(out)


def gamma_after_delete(
    g: Graph, xs: Iterable[int], *, cache: Optional[GammaCache] = None
) -> int:
    """gamma of the graph with ``xs`` removed."""
    return gamma(delete_vertices(g, xs).graph, cache=cache)


def gamma_set_count(g: Graph, *, budget: Optional[int] = None) -> int:
    return len(all_gamma_sets(g, budget=budget))


def dominates(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> bool:
    """True iff every vertex of ys lies in the closed neighborhood of xs."""
    cover = 0
    for v in xs:
        cover |= g.closed_mask(v)
    return mask_of(ys) & ~cover == 0
