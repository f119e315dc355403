"""Vertex criticality classes and the graph-level criticality predicates.

Deleting a vertex can leave the domination number unchanged, raise it, or
lower it (by exactly one); the three cases partition the vertex set.  On top
of that partition sit the predicates: critical (every deletion lowers gamma),
bicritical (every pair deletion lowers gamma), and weak bicritical (no
deletion raises gamma, and deleting any gamma-preserving vertex leaves a
critical graph).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .domination import GammaCache, all_gamma_sets, gamma, gamma_after_delete
from .graph import (
    Graph,
    delete_vertices,
    diametrical_vertices,
    distance_layer,
    eccentricity,
    is_connected,
    mask_of,
)


class VertexClass(enum.Enum):
    ZERO = "zero"    # deletion keeps gamma
    PLUS = "plus"    # deletion raises gamma
    MINUS = "minus"  # deletion lowers gamma (the critical vertices)


class Partition(NamedTuple):
    zero: tuple[int, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]


@dataclass(frozen=True)
class CriticalityProfile:
    gamma: int
    classes: tuple[VertexClass, ...]
    is_critical: bool
    is_bicritical: bool
    is_weak_bicritical: bool
    #: pair deletion is vacuous or forced on orders <= 2, so the bicritical
    #: verdict there carries no structural content
    bicritical_degenerate: bool

    @property
    def partition(self) -> Partition:
        return Partition(
            tuple(v for v, c in enumerate(self.classes) if c is VertexClass.ZERO),
            tuple(v for v, c in enumerate(self.classes) if c is VertexClass.PLUS),
            tuple(v for v, c in enumerate(self.classes) if c is VertexClass.MINUS),
        )


@dataclass(frozen=True)
class SufficientPair:
    """A diametrical vertex x and radius j whose distance-j ball captures a
    large slice of some minimum dominating set (at least (j+l)/2 vertices)."""

    x: int
    j: int
    l: int
    witness_set: tuple[int, ...]


def classify_vertex(
    g: Graph, x: int, *, cache: Optional[GammaCache] = None
) -> VertexClass:
    base = gamma(g, cache=cache)
    after = gamma_after_delete(g, (x,), cache=cache)
    assert after >= base - 1, "vertex deletion lowered gamma by more than one"
    if after == base:
        return VertexClass.ZERO
    if after > base:
        return VertexClass.PLUS
    return VertexClass.MINUS


def vertex_partition(g: Graph, *, cache: Optional[GammaCache] = None) -> Partition:
    zero, plus, minus = [], [], []
    for v in range(g.n):
        c = classify_vertex(g, v, cache=cache)
        (zero if c is VertexClass.ZERO else plus if c is VertexClass.PLUS else minus).append(v)
    return Partition(tuple(zero), tuple(plus), tuple(minus))


def is_critical(g: Graph, *, cache: Optional[GammaCache] = None) -> bool:
    """Every vertex deletion lowers gamma.  Vacuously true for the empty graph."""
    base = gamma(g, cache=cache)
    return all(
        gamma_after_delete(g, (v,), cache=cache) < base for v in range(g.n)
    )


def is_k_critical(g: Graph, k: int, *, cache: Optional[GammaCache] = None) -> bool:
    return gamma(g, cache=cache) == k and is_critical(g, cache=cache)


def is_bicritical(g: Graph, *, cache: Optional[GammaCache] = None) -> bool:
    """Every deletion of two distinct vertices lowers gamma.

    Orders <= 2 pass vacuously or trivially; callers that care can consult
    the degenerate flag on the profile.
    """
    base = gamma(g, cache=cache)
    return all(
        gamma_after_delete(g, pair, cache=cache) < base
        for pair in itertools.combinations(range(g.n), 2)
    )


def is_weak_bicritical(g: Graph, *, cache: Optional[GammaCache] = None) -> bool:
    """No vertex deletion raises gamma, and every gamma-preserving deletion
    leaves a critical graph."""
    base = gamma(g, cache=cache)
    for v in range(g.n):
        after = gamma_after_delete(g, (v,), cache=cache)
        if after > base:
            return False
        if after == base and not is_critical(
            delete_vertices(g, (v,)).graph, cache=cache
        ):
            return False
    return True


def criticality_profile(
    g: Graph, *, cache: Optional[GammaCache] = None
) -> CriticalityProfile:
    base = gamma(g, cache=cache)
    classes = tuple(classify_vertex(g, v, cache=cache) for v in range(g.n))
    critical = all(c is VertexClass.MINUS for c in classes)
    if critical:
        weak = True
    else:
        weak = all(c is not VertexClass.PLUS for c in classes) and all(
            is_critical(delete_vertices(g, (v,)).graph, cache=cache)
            for v, c in enumerate(classes)
            if c is VertexClass.ZERO
        )
    bicritical = is_bicritical(g, cache=cache)
    return CriticalityProfile(
        gamma=base,
        classes=classes,
        is_critical=critical,
        is_bicritical=bicritical,
        is_weak_bicritical=weak,
        bicritical_degenerate=g.n <= 2,
    )


def neighborhood_containment_pairs(g: Graph) -> list[tuple[int, int]]:
    """Ordered pairs (u, v), u != v, with N[u] a subset of N[v]."""
    out = []
    for u in range(g.n):
        cu = g.closed_mask(u)
        for v in range(g.n):
            if u != v and cu & ~g.closed_mask(v) == 0:
                out.append((u, v))
    return out


def find_sufficient_pairs(
    g: Graph, l: int, *, budget: Optional[int] = None
) -> list[SufficientPair]:
    """All pairs (x, j) of a diametrical vertex and a radius j >= 2 such that
    some minimum dominating set S has 2*|S within distance j of x| >= j + l.

    The threshold (j+l)/2 is evaluated by doubling, so half-integer bounds
    stay exact.  Only connected graphs are accepted; radii beyond the
    eccentricity of x add nothing and are not searched.
    """
    if l < 3:
        raise ValueError(f"l must be at least 3, got {l}")
    if not is_connected(g):
        raise ValueError("sufficient pairs are defined for connected graphs")
    gamma_sets = all_gamma_sets(g, budget=budget)
    out = []
    for x in diametrical_vertices(g):
        ecc = int(eccentricity(g, x))
        ball = g.closed_mask(x) | 1 << x  # distance <= 1
        for j in range(2, ecc + 1):
            ball |= mask_of(distance_layer(g, x, j))
            witness = None
            for s in gamma_sets:
                inside = sum(1 for v in s if ball >> v & 1)
                if 2 * inside >= j + l:
                    witness = s
                    break
            if witness is not None:
                out.append(SufficientPair(x=x, j=j, l=l, witness_set=witness))
    return out
