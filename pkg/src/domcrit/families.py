"""The extremal families attaining diameter 2k-2 at domination number k.

Three layers:

* chain family: blocks isomorphic to a complete graph minus a perfect
  matching (a "cocktail party" graph), glued in a path at mutually
  non-adjacent designated vertices.  These are the critical graphs with
  extremal diameter.
* twin family: the 3-block-parameter graphs obtained from a two-block chain
  by duplicating its cut vertex as an open twin (variant 1) or closed twin
  (variant 2).
* star-chain closure: recursively glue a chain member at a diametrical
  vertex onto a closure member at an identifiable vertex (critical, and for
  gamma >= 3 also diametrical).  Together with the connected
  weak-2-bicritical base shapes and the twin family this is the weak
  bicritical extremal family.

Constructors, exhaustive enumerators up to a given order, and exact
structural recognizers are all here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .criticality import vertex_partition
from .domination import GammaCache, gamma, gamma_after_delete
from .graph import (
    Graph,
    bits,
    blocks,
    coalesce,
    complement,
    complete_graph,
    components,
    cut_vertices,
    delete_vertices,
    diametrical_vertices,
    disjoint_union,
    is_connected,
    mask_of,
    path_graph,
    with_edge,
    with_vertex,
)
from .iso import canonical_key


@dataclass(frozen=True)
class FkParams:
    """Chain parameters: k-1 block sizes, each block on 2*m_i vertices."""

    k: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if len(self.m) != self.k - 1:
            raise ValueError(f"need {self.k - 1} block sizes, got {len(self.m)}")
        if any(mi < 2 for mi in self.m):
            raise ValueError("every block size must be at least 2")

    @property
    def order(self) -> int:
        return 2 * sum(self.m) - (self.k - 2)


class Fstar2Variant(enum.Enum):
    MATCHING = "matching"        # complement of (m+1) disjoint edges
    MATCHING_K3 = "matching_k3"  # complement of m disjoint edges plus a triangle
    MATCHING_P3 = "matching_p3"  # complement of m disjoint edges plus a 3-path


@dataclass
class FamilyInstance:
    graph: Graph
    k: int
    construction: str  # "Fk" | "Fstar2" | "Fpp3" | "coalesced"
    params: dict
    endpoints: tuple[int, ...]
    cut_vertices: tuple[int, ...]
    identifiable: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    def sidecar(self) -> dict:
        """JSON-ready metadata to accompany the graph6 serialization."""
        return {
            "k": self.k,
            "construction": self.construction,
            "params": self.params,
            "endpoints": list(self.endpoints),
            "cut_vertices": list(self.cut_vertices),
            "identifiable": list(self.identifiable),
        }


def cocktail_party_graph(m: int) -> Graph:
    """Complete graph on 2m vertices minus the perfect matching {2i, 2i+1}."""
    if m < 1:
        raise ValueError("need at least one non-edge pair")
    g = complete_graph(2 * m)
    masks = list(g.adj)
    for i in range(m):
        a, b = 2 * i, 2 * i + 1
        masks[a] &= ~(1 << b)
        masks[b] &= ~(1 << a)
    return Graph.from_adj(2 * m, masks)


def identifiable_vertices(
    graph_or_instance, k: Optional[int] = None, *, cache: Optional[GammaCache] = None
) -> tuple[int, ...]:
    """Critical vertices, additionally diametrical when k >= 3.

    Accepts either a FamilyInstance (k taken from it) or a Graph plus k.
    """
    if isinstance(graph_or_instance, FamilyInstance):
        g = graph_or_instance.graph
        k = graph_or_instance.k
    else:
        g = graph_or_instance
        if k is None:
            raise ValueError("k is required when passing a bare graph")
    minus = vertex_partition(g, cache=cache).minus
    if k <= 2:
        return minus
    diam_set = set(diametrical_vertices(g))
    return tuple(v for v in minus if v in diam_set)


def _diametral_pair(g: Graph) -> tuple[int, ...]:
    from .graph import distance, diameter

    d = diameter(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if distance(g, u, v) == d:
                return (u, v)
    return ()


def build_Fk(
    params: FkParams, *, cache: Optional[GammaCache] = None
) -> FamilyInstance:
    """Glue the chain of cocktail-party blocks at non-adjacent designated
    vertices.  Designated vertices of each block are its first non-edge pair
    (labels 0 and 1 within the block)."""
    g = cocktail_party_graph(params.m[0])
    u1 = 0
    v_last = 1
    cuts: list[int] = []
    for mi in params.m[1:]:
        block = cocktail_party_graph(mi)
        res = coalesce(g, v_last, block, 0)
        g = res.graph
        cuts.append(res.merged_vertex)  # first operand keeps labels
        v_last = res.map2[1]
    return FamilyInstance(
        graph=g,
        k=params.k,
        construction="Fk",
        params={"m": list(params.m)},
        endpoints=(u1, v_last),
        cut_vertices=tuple(cuts),
        identifiable=identifiable_vertices(g, params.k, cache=cache),
    )


def build_Fstar2(
    variant: Fstar2Variant, m: int, *, cache: Optional[GammaCache] = None
) -> FamilyInstance:
    """One of the three connected weak-2-bicritical shapes."""
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if variant is Fstar2Variant.MATCHING:
        base = disjoint_union([complete_graph(2)] * (m + 1))
    elif variant is Fstar2Variant.MATCHING_K3:
        base = disjoint_union([complete_graph(2)] * m + [complete_graph(3)])
    else:
        base = disjoint_union([complete_graph(2)] * m + [path_graph(3)])
    g = complement(base)
    return FamilyInstance(
        graph=g,
        k=2,
        construction="Fstar2",
        params={"variant": variant.value, "m": m},
        endpoints=_diametral_pair(g),
        cut_vertices=(),
        identifiable=identifiable_vertices(g, 2, cache=cache),
    )


def build_Fpp3(
    m1: int, m2: int, variant: int, *, cache: Optional[GammaCache] = None
) -> FamilyInstance:
    """Duplicate the cut vertex of the two-block chain as a twin.

    Variant 1 adds an open twin (same neighborhood, non-adjacent), variant 2
    a closed twin (same neighborhood plus the connecting edge).
    """
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    if m1 < 2 or m2 < 2:
        raise ValueError("block sizes must be at least 2")
    base = build_Fk(FkParams(3, (m1, m2)))
    u = base.cut_vertices[0]
    g = with_vertex(base.graph, bits(base.graph.adj[u]))
    twin = g.n - 1
    if variant == 2:
        g = with_edge(g, u, twin)
    return FamilyInstance(
        graph=g,
        k=3,
        construction="Fpp3",
        params={"m1": m1, "m2": m2, "variant": variant, "hub": u, "twin": twin},
        endpoints=base.endpoints,
        cut_vertices=(),
        identifiable=identifiable_vertices(g, 3, cache=cache),
    )


def build_Fstar_k(
    h1: FamilyInstance,
    u1: int,
    h2: FamilyInstance,
    x2: int,
    *,
    cache: Optional[GammaCache] = None,
) -> FamilyInstance:
    """Glue a chain member (at a diametrical vertex) onto a closure member
    (at an identifiable vertex)."""
    if h1.construction != "Fk":
        raise ValueError("first operand must be a chain-family instance")
    if u1 not in diametrical_vertices(h1.graph):
        raise ValueError(f"vertex {u1} is not diametrical in the first operand")
    if x2 not in h2.identifiable:
        raise ValueError(f"vertex {x2} is not identifiable in the second operand")
    res = coalesce(h1.graph, u1, h2.graph, x2)
    k = h1.k + h2.k - 1
    g = res.graph
    cuts = sorted(
        {res.map1[c] for c in h1.cut_vertices}
        | {res.map2[c] for c in h2.cut_vertices}
        | {res.merged_vertex}
    )
    return FamilyInstance(
        graph=g,
        k=k,
        construction="coalesced",
        params={
            "k1": h1.k,
            "k2": h2.k,
            "attach1": u1,
            "attach2": x2,
            "part1": h1.sidecar(),
            "part2": h2.sidecar(),
        },
        endpoints=_diametral_pair(g),
        cut_vertices=tuple(cuts),
        identifiable=identifiable_vertices(g, k, cache=cache),
    )


# -- enumeration -------------------------------------------------------------


def _m_vectors(k: int, max_order: int):
    # order = 2*sum(m) - (k-2); block sizes at least 2
    budget = (max_order + k - 2) // 2
    slots = k - 1

    def rec(prefix: list[int], remaining: int):
        if len(prefix) == slots:
            yield tuple(prefix)
            return
        slots_left = slots - len(prefix) - 1
        for mi in range(2, remaining - 2 * slots_left + 1):
            prefix.append(mi)
            yield from rec(prefix, remaining - mi)
            prefix.pop()

    if budget >= 2 * slots:
        yield from rec([], budget)


def enumerate_Fk(
    k: int, max_order: int, *, cache: Optional[GammaCache] = None
) -> list[FamilyInstance]:
    """All chain-family members with at most max_order vertices, one
    representative per isomorphism class, sorted by (order, canonical key)."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    seen: dict[bytes, FamilyInstance] = {}
    for m in _m_vectors(k, max_order):
        if m > tuple(reversed(m)):
            continue  # the mirror chain is isomorphic
        inst = build_Fk(FkParams(k, m), cache=cache)
        key = canonical_key(inst.graph)
        if key not in seen:
            seen[key] = inst
    return sorted(seen.values(), key=lambda i: (i.n, canonical_key(i.graph)))


_FSTAR_MEMO: dict[tuple[int, int], list[FamilyInstance]] = {}


def enumerate_Fstar_k(
    k: int, max_order: int, *, cache: Optional[GammaCache] = None
) -> list[FamilyInstance]:
    """All closure-family members with at most max_order vertices, one per
    isomorphism class, sorted by (order, canonical key).

    Distinct parses can collide isomorphically; collisions are resolved by
    keeping the earliest parse in a fixed generation order (direct chains
    first, then twins, then coalescences).
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    memo_key = (k, max_order)
    if memo_key in _FSTAR_MEMO:
        return _FSTAR_MEMO[memo_key]
    cache = cache or GammaCache()
    seen: dict[bytes, FamilyInstance] = {}

    def add(inst: FamilyInstance) -> None:
        key = canonical_key(inst.graph)
        if key not in seen:
            seen[key] = inst

    if k == 2:
        for variant, base_order, step in (
            (Fstar2Variant.MATCHING, 4, 2),
            (Fstar2Variant.MATCHING_K3, 5, 2),
            (Fstar2Variant.MATCHING_P3, 5, 2),
        ):
            m = 1
            while base_order + step * (m - 1) <= max_order:
                add(build_Fstar2(variant, m, cache=cache))
                m += 1
    else:
        for inst in enumerate_Fk(k, max_order, cache=cache):
            add(inst)
        if k == 3:
            for m1 in range(2, max_order // 2):
                for m2 in range(m1, (max_order - 2 * m1) // 2 + 1):
                    for variant in (1, 2):
                        if 2 * (m1 + m2) <= max_order:
                            add(build_Fpp3(m1, m2, variant, cache=cache))
        for k1 in range(2, k):
            k2 = k + 1 - k1
            for h1 in enumerate_Fk(k1, max_order - 3, cache=cache):
                cap2 = max_order - h1.n + 1
                for h2 in enumerate_Fstar_k(k2, cap2, cache=cache):
                    if h1.n + h2.n - 1 > max_order:
                        continue
                    for u1 in diametrical_vertices(h1.graph):
                        for x2 in h2.identifiable:
                            glued = coalesce(h1.graph, u1, h2.graph, x2).graph
                            if canonical_key(glued) in seen:
                                continue
                            add(build_Fstar_k(h1, u1, h2, x2, cache=cache))
    result = sorted(seen.values(), key=lambda i: (i.n, canonical_key(i.graph)))
    _FSTAR_MEMO[memo_key] = result
    return result


# -- recognition -------------------------------------------------------------


@dataclass(frozen=True)
class FkCertificate:
    params: FkParams
    block_chain: tuple[tuple[int, ...], ...]
    cut_chain: tuple[int, ...]
    endpoints: tuple[int, int]

    @property
    def k(self) -> int:
        return self.params.k

    def to_json(self) -> dict:
        return {
            "family": "chain",
            "k": self.params.k,
            "m": list(self.params.m),
            "block_chain": [list(b) for b in self.block_chain],
            "cut_chain": list(self.cut_chain),
            "endpoints": list(self.endpoints),
        }


@dataclass(frozen=True)
class Fstar2Certificate:
    variant: Fstar2Variant
    m: int

    @property
    def k(self) -> int:
        return 2

    def to_json(self) -> dict:
        return {"family": "star_base", "variant": self.variant.value, "m": self.m}


@dataclass(frozen=True)
class Fpp3Certificate:
    m1: int
    m2: int
    variant: int
    hub: int
    twin: int

    @property
    def k(self) -> int:
        return 3

    def to_json(self) -> dict:
        return {
            "family": "twin",
            "m1": self.m1,
            "m2": self.m2,
            "variant": self.variant,
            "hub": self.hub,
            "twin": self.twin,
        }


@dataclass(frozen=True)
class CoalescenceCertificate:
    cut: int
    chain_side: tuple[int, ...]
    chain_cert: FkCertificate
    rest_side: tuple[int, ...]
    rest_cert: "FstarCertificate"

    @property
    def k(self) -> int:
        return self.chain_cert.k + self.rest_cert.k - 1

    def to_json(self) -> dict:
        return {
            "family": "coalescence",
            "k": self.k,
            "cut": self.cut,
            "chain_side": list(self.chain_side),
            "chain": self.chain_cert.to_json(),
            "rest_side": list(self.rest_side),
            "rest": self.rest_cert.to_json(),
        }


FstarCertificate = Union[
    Fstar2Certificate, Fpp3Certificate, CoalescenceCertificate, FkCertificate
]


def _is_cocktail_block(g: Graph, block: tuple[int, ...]) -> bool:
    # complete minus a perfect matching: even order >= 4 and exactly one
    # block-internal non-neighbor per vertex
    if len(block) < 4 or len(block) % 2:
        return False
    bm = mask_of(block)
    for v in block:
        if (bm & ~g.adj[v] & ~(1 << v)).bit_count() != 1:
            return False
    return True


def _block_nonneighbor(g: Graph, block: tuple[int, ...], v: int) -> int:
    bm = mask_of(block)
    rest = bm & ~g.adj[v] & ~(1 << v)
    return next(bits(rest))


def recognize_Fk(g: Graph) -> Optional[FkCertificate]:
    """Exact structural membership test for the chain family.

    The block-cut tree must be a path, every block a cocktail party on at
    least four vertices, and the two attachment vertices of every internal
    block mutually non-adjacent.  Orientation is canonical: the block-size
    vector is the lexicographically smaller of the two readings.
    """
    if not is_connected(g):
        raise ValueError("chain recognition is defined for connected graphs")
    if g.n < 4:
        return None
    blks = blocks(g)
    cuts = set(cut_vertices(g))
    if any(not _is_cocktail_block(g, b) for b in blks):
        return None
    if len(blks) == 1:
        u = 0
        v = _block_nonneighbor(g, blks[0], u)
        return FkCertificate(
            params=FkParams(2, (g.n // 2,)),
            block_chain=(blks[0],),
            cut_chain=(),
            endpoints=(u, v),
        )
    # chain shape: end blocks hold one cut vertex, inner blocks two, and a
    # cut vertex joins exactly two blocks
    per_block = [tuple(sorted(set(b) & cuts)) for b in blks]
    if sum(1 for c in per_block if len(c) == 1) != 2:
        return None
    if any(len(c) not in (1, 2) for c in per_block):
        return None
    by_cut: dict[int, list[int]] = {}
    for i, cs in enumerate(per_block):
        for c in cs:
            by_cut.setdefault(c, []).append(i)
    if any(len(v) != 2 for v in by_cut.values()):
        return None
    start = min(
        (i for i, cs in enumerate(per_block) if len(cs) == 1),
        key=lambda i: min(blks[i]),
    )
    chain = [start]
    cut_chain = [per_block[start][0]]
    while True:
        nxt = [i for i in by_cut[cut_chain[-1]] if i != chain[-1]]
        if len(nxt) != 1:
            return None
        chain.append(nxt[0])
        outgoing = [c for c in per_block[nxt[0]] if c != cut_chain[-1]]
        if not outgoing:
            break
        cut_chain.append(outgoing[0])
    if len(chain) != len(blks):
        return None  # branching, not a path
    for idx in range(1, len(chain) - 1):
        a, b = cut_chain[idx - 1], cut_chain[idx]
        if g.has_edge(a, b):
            return None
    m = tuple(len(blks[i]) // 2 for i in chain)
    flipped = tuple(reversed(m))
    flip = flipped < m or (
        flipped == m and min(blks[chain[-1]]) < min(blks[chain[0]])
    )
    if flip:
        chain.reverse()
        cut_chain.reverse()
        m = flipped
    u1 = _block_nonneighbor(g, blks[chain[0]], cut_chain[0])
    v_last = _block_nonneighbor(g, blks[chain[-1]], cut_chain[-1])
    return FkCertificate(
        params=FkParams(len(chain) + 1, m),
        block_chain=tuple(blks[i] for i in chain),
        cut_chain=tuple(cut_chain),
        endpoints=(u1, v_last),
    )


def complement_component_shapes(g: Graph) -> Optional[tuple[int, int, int]]:
    """Component census of the complement when every component is an edge, a
    triangle, or a 3-path: returns (edges, triangles, paths) or None.

    Works on raw masks; this sits on the hot path of whole-atlas scans.
    """
    full = (1 << g.n) - 1
    co = [full & ~m & ~(1 << v) for v, m in enumerate(g.adj)]
    k2 = k3 = p3 = 0
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= co[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        size = comp.bit_count()
        if size == 2:
            k2 += 1
        elif size == 3:
            inner = sum((co[u] & comp).bit_count() for u in bits(comp)) // 2
            if inner == 3:
                k3 += 1
            elif inner == 2:
                p3 += 1
            else:
                return None
        else:
            return None
    return k2, k3, p3


def _match_fstar2(g: Graph) -> Optional[Fstar2Certificate]:
    # the three base shapes are complements of unions of edges plus at most
    # one triangle or one 3-path
    shapes = complement_component_shapes(g)
    if shapes is None:
        return None
    k2, k3, p3 = shapes
    if k3 + p3 > 1:
        return None
    if k3 == 1 and k2 >= 1:
        return Fstar2Certificate(Fstar2Variant.MATCHING_K3, k2)
    if p3 == 1 and k2 >= 1:
        return Fstar2Certificate(Fstar2Variant.MATCHING_P3, k2)
    if k3 == 0 and p3 == 0 and k2 >= 2:
        return Fstar2Certificate(Fstar2Variant.MATCHING, k2 - 1)
    return None


def _match_fpp3(g: Graph) -> Optional[Fpp3Certificate]:
    for u in range(g.n):
        for twin in range(g.n):
            if u == twin:
                continue
            open_twin = g.adj[u] == g.adj[twin]
            closed_twin = g.has_edge(u, twin) and g.closed_mask(u) == g.closed_mask(
                twin
            )
            if not (open_twin or closed_twin):
                continue
            rest = delete_vertices(g, (twin,))
            if not is_connected(rest.graph):
                continue
            cert = recognize_Fk(rest.graph)
            if cert is None or cert.k != 3:
                continue
            if rest.old_to_new[u] != cert.cut_chain[0]:
                continue
            return Fpp3Certificate(
                m1=cert.params.m[0],
                m2=cert.params.m[1],
                variant=1 if open_twin else 2,
                hub=u,
                twin=twin,
            )
    return None


def _side_splits(g: Graph, x: int):
    # bipartitions of the components of g - x; each side plus x induces one
    # coalescence operand
    rest = delete_vertices(g, (x,))
    comps = [tuple(rest.kept[v] for v in comp) for comp in components(rest.graph)]
    t = len(comps)
    for picked in range(1, 1 << (t - 1)):  # comp 0 always stays on side B
        side_a: list[int] = []
        side_b: list[int] = list(comps[0])
        for i in range(1, t):
            (side_a if picked >> (i - 1) & 1 else side_b).extend(comps[i])
        yield tuple(sorted(side_a + [x])), tuple(sorted(side_b + [x]))


def recognize_Fstar_k(
    g: Graph, *, cache: Optional[GammaCache] = None
) -> Optional[FstarCertificate]:
    """Exact membership test for the closure family.

    Two-connected members are exactly the weak-2-bicritical base shapes and
    the twin family; everything else must split at a cut vertex into a chain
    member glued at a diametrical vertex and a smaller closure member glued
    at an identifiable vertex.  Vertex labels inside nested certificates are
    local to their side.
    """
    if not is_connected(g):
        raise ValueError("closure recognition is defined for connected graphs")
    if g.n < 4 or g.min_degree() < 2:
        return None
    cache = cache or GammaCache()
    cuts = cut_vertices(g)
    if not cuts:
        base = _match_fstar2(g)
        if base is not None:
            return base
        return _match_fpp3(g)
    for x in cuts:
        for side_a, side_b in _side_splits(g, x):
            for chain_side, rest_side in ((side_a, side_b), (side_b, side_a)):
                cert = _try_split(g, x, chain_side, rest_side, cache)
                if cert is not None:
                    return cert
    return None


def _try_split(
    g: Graph,
    x: int,
    chain_side: tuple[int, ...],
    rest_side: tuple[int, ...],
    cache: GammaCache,
) -> Optional[CoalescenceCertificate]:
    ch = delete_vertices(g, [v for v in range(g.n) if v not in chain_side])
    chain_cert = recognize_Fk(ch.graph)
    if chain_cert is None:
        return None
    cx = ch.old_to_new[x]
    if cx not in diametrical_vertices(ch.graph):
        return None
    rs = delete_vertices(g, [v for v in range(g.n) if v not in rest_side])
    rg = rs.graph
    rx = rs.old_to_new[x]
    g_rest = gamma(rg, cache=cache)
    if gamma_after_delete(rg, (rx,), cache=cache) >= g_rest:
        return None  # attach vertex must be critical on the rest side
    if g_rest >= 3 and rx not in diametrical_vertices(rg):
        return None
    rest_cert = recognize_Fstar_k(rg, cache=cache)
    if rest_cert is None:
        return None
    return CoalescenceCertificate(
        cut=x,
        chain_side=chain_side,
        chain_cert=chain_cert,
        rest_side=rest_side,
        rest_cert=rest_cert,
    )
