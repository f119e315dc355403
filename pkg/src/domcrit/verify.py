"""Mechanical verification of the diameter and coalescence results.

Each named result becomes a check over either (a) every non-isomorphic graph
up to a configured order, (b) seeded random coalescence instances, or (c)
generated family members.  A check reports how many graphs met its
hypothesis, how many passed, and serialized counterexamples for any failure,
so vacuous passes are visible instead of silent.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .criticality import (
    find_sufficient_pairs,
    is_critical,
    is_weak_bicritical,
    neighborhood_containment_pairs,
    vertex_partition,
)
from .domination import GammaCache, gamma
from .enumeration import graphs_up_to, random_connected_graph
from .families import enumerate_Fk, recognize_Fk, recognize_Fstar_k
from .graph import (
    Graph,
    coalesce,
    components,
    delete_vertices,
    diameter,
    diametrical_vertices,
    distance_layer,
    is_connected,
    mask_of,
)
from .graphio import to_graph6
from .iso import canonical_key

DEFAULT_SEED = 1729
SCAN_MAX_ORDER = 10

PER_GRAPH_CHECKS = (
    "ThmA",
    "ThmC",
    "ThmD",
    "ThmE",
    "Thm1",
    "Thm3_1",
    "Lem1_1",
    "Lem1_2",
    "Lem1_22",
    "Lem3A_l3",
    "Lem3A_l4",
    "ComponentsWB",
)
PAIR_CHECKS = ("Thm2_1_fwd", "Thm2_1_bwd", "Lem1_3")
FAMILY_CHECKS = ("Obs1_2_1",)
UNCHECKABLE = ("ThmB",)  # existential over external constructions
ALL_CHECKS = PER_GRAPH_CHECKS + PAIR_CHECKS + FAMILY_CHECKS + UNCHECKABLE


class ScanBudgetError(Exception):
    """Raised when a scan configuration exceeds the hard cost guards."""


@dataclass(frozen=True)
class ScanConfig:
    n_max: int = 7
    connected_only: bool = False
    theorems: tuple[str, ...] = ALL_CHECKS
    seed: int = DEFAULT_SEED
    pairs: int = 1000
    family_order_cap: int = 12
    jobs: int = 1
    #: optional graph6 file (one graph per line) scanned instead of the atlas
    graph_file: Optional[str] = None

    def validate(self) -> None:
        if self.graph_file is None and (
            self.n_max < 1 or self.n_max > SCAN_MAX_ORDER
        ):
            raise ScanBudgetError(
                f"scan order must be between 1 and {SCAN_MAX_ORDER}, got {self.n_max}"
            )
        unknown = [t for t in self.theorems if t not in ALL_CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.pairs < 0 or self.jobs < 1:
            raise ValueError("pairs must be >= 0 and jobs >= 1")


@dataclass
class TheoremCheck:
    theorem_id: str
    status: str  # "pass" | "fail" | "skipped"
    hypothesis_count: int
    pass_count: int
    fail_count: int
    skipped_count: int
    counterexamples: list[dict] = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status,
            "hypothesis_count": self.hypothesis_count,
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "skipped_count": self.skipped_count,
            "counterexamples": self.counterexamples,
            "note": self.note,
        }


class GraphFacts:
    """Lazily computed per-graph quantities shared by the checks."""

    def __init__(self, g: Graph, cache: Optional[GammaCache] = None):
        self.g = g
        self.cache = cache

    @cached_property
    def gamma(self) -> int:
        return gamma(self.g, cache=self.cache)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def diameter(self):
        return diameter(self.g)

    @cached_property
    def partition(self):
        return vertex_partition(self.g, cache=self.cache)

    @cached_property
    def critical(self) -> bool:
        return not self.partition.zero and not self.partition.plus

    @cached_property
    def bicritical(self) -> bool:
        from .criticality import is_bicritical

        return is_bicritical(self.g, cache=self.cache)

    @cached_property
    def weak_bicritical(self) -> bool:
        if self.partition.plus:
            return False
        return all(
            is_critical(delete_vertices(self.g, (v,)).graph, cache=self.cache)
            for v in self.partition.zero
        )

    @cached_property
    def fk_cert(self):
        return recognize_Fk(self.g) if self.connected else None

    @cached_property
    def fstar_cert(self):
        return recognize_Fstar_k(self.g, cache=self.cache) if self.connected else None


def _g6(g: Graph) -> str:
    return to_graph6(g)


# -- per-graph checks --------------------------------------------------------
# Each returns ("pass"|"fail"|"skip", diagnostics-or-None).


def _check_thma(f: GraphFacts):
    if not (f.connected and f.gamma >= 2 and f.critical):
        return "skip", None
    ok = f.diameter <= 2 * f.gamma - 2
    return ("pass" if ok else "fail"), (
        None if ok else {"gamma": f.gamma, "diameter": f.diameter}
    )


def _check_thmc(f: GraphFacts):
    if not (f.connected and f.gamma >= 3 and f.bicritical):
        return "skip", None
    ok = f.diameter <= 2 * f.gamma - 3
    return ("pass" if ok else "fail"), (
        None if ok else {"gamma": f.gamma, "diameter": f.diameter}
    )


def _check_thmd(f: GraphFacts):
    if not (f.connected and f.gamma >= 2 and f.weak_bicritical):
        return "skip", None
    ok = f.diameter <= 2 * f.gamma - 2
    return ("pass" if ok else "fail"), (
        None if ok else {"gamma": f.gamma, "diameter": f.diameter}
    )


def _check_thme(f: GraphFacts):
    if not (f.connected and f.gamma >= 2 and f.critical):
        return "skip", None
    bound = f.diameter <= 2 * f.gamma - 2
    recognized = f.fk_cert is not None
    equality_iff = (f.diameter == 2 * f.gamma - 2) == recognized
    k_consistent = not recognized or f.fk_cert.k == f.gamma
    ok = bound and equality_iff and k_consistent
    return ("pass" if ok else "fail"), (
        None
        if ok
        else {
            "gamma": f.gamma,
            "diameter": f.diameter,
            "recognized": recognized,
        }
    )


def _check_thm1(f: GraphFacts):
    if not (f.connected and f.gamma >= 2 and f.weak_bicritical):
        return "skip", None
    bound = f.diameter <= 2 * f.gamma - 2
    recognized = f.fstar_cert is not None
    equality_iff = (f.diameter == 2 * f.gamma - 2) == recognized
    k_consistent = not recognized or f.fstar_cert.k == f.gamma
    ok = bound and equality_iff and k_consistent
    return ("pass" if ok else "fail"), (
        None
        if ok
        else {
            "gamma": f.gamma,
            "diameter": f.diameter,
            "recognized": recognized,
        }
    )


def _check_thm3_1(f: GraphFacts):
    if not (f.connected and f.gamma >= 3 and f.weak_bicritical):
        return "skip", None
    minus = mask_of(f.partition.minus)
    witness = None
    for x in diametrical_vertices(f.g):
        near = 0
        for i in (1, 2, 3):
            near |= mask_of(distance_layer(f.g, x, i))
        if near & ~minus == 0 and len(distance_layer(f.g, x, 2)) >= 2:
            witness = x
            break
    if witness is None:
        return "skip", None
    ok = f.diameter <= 2 * f.gamma - 3
    return ("pass" if ok else "fail"), (
        None if ok else {"gamma": f.gamma, "diameter": f.diameter, "x": witness}
    )


def _check_lem3a(f: GraphFacts, l: int):
    if not (f.connected and f.gamma >= 3 and f.weak_bicritical):
        return "skip", None
    pairs = find_sufficient_pairs(f.g, l)
    if not pairs:
        return "skip", None
    ok = f.diameter <= 2 * f.gamma - l + 1
    return ("pass" if ok else "fail"), (
        None
        if ok
        else {
            "gamma": f.gamma,
            "diameter": f.diameter,
            "l": l,
            "pair": [pairs[0].x, pairs[0].j],
        }
    )


def _check_lem1_1(f: GraphFacts):
    pairs = neighborhood_containment_pairs(f.g)
    if not pairs:
        return "skip", None
    minus = set(f.partition.minus)
    bad = [(u, v) for u, v in pairs if v in minus]
    return ("pass" if not bad else "fail"), (
        None if not bad else {"violating_pairs": bad[:5]}
    )


def _check_lem1_2(f: GraphFacts):
    if not f.weak_bicritical:
        return "skip", None
    for comp in components(f.g):
        if len(comp) >= 3:
            if min(f.g.degree(v) for v in comp) < 2:
                return "fail", {"component": list(comp)}
    return "pass", None


def _weak2_shape(g: Graph) -> Optional[str]:
    """Complement-shape membership for the weak-2-bicritical classification.

    The three families: complements of m disjoint edges (m >= 1), of m
    disjoint edges plus a triangle (m >= 1), and of m-1 disjoint edges plus
    a 3-path (m >= 1, so the path alone qualifies).  Disconnected graphs are
    in scope here, unlike the connected base shapes.
    """
    from .families import complement_component_shapes

    shapes = complement_component_shapes(g)
    if shapes is None:
        return None
    k2, k3, p3 = shapes
    if k3 + p3 > 1:
        return None
    if k3 == 1:
        return "matching_k3" if k2 >= 1 else None
    if p3 == 1:
        return "matching_p3"  # m >= 1 allows zero extra edges
    return "matching" if k2 >= 1 else None


def _check_lem1_22(f: GraphFacts):
    shape = _weak2_shape(f.g)
    weak2 = f.gamma == 2 and f.weak_bicritical
    if not weak2 and shape is None:
        return "skip", None
    if weak2 != (shape is not None):
        return "fail", {"weak_2_bicritical": weak2, "shape": shape}
    crit2 = f.gamma == 2 and f.critical
    if crit2 != (shape == "matching"):
        return "fail", {"two_critical": crit2, "shape": shape}
    return "pass", None


def _check_components_wb(f: GraphFacts):
    if f.connected or not f.weak_bicritical:
        return "skip", None
    noncritical = 0
    for comp in components(f.g):
        sub = delete_vertices(
            f.g, [v for v in range(f.g.n) if v not in comp]
        ).graph
        if not is_weak_bicritical(sub, cache=f.cache):
            return "fail", {"component": list(comp), "reason": "not weak bicritical"}
        if not is_critical(sub, cache=f.cache):
            noncritical += 1
    if noncritical > 1:
        return "fail", {"noncritical_components": noncritical}
    return "pass", None


_PER_GRAPH_IMPL = {
    "ThmA": _check_thma,
    "ThmC": _check_thmc,
    "ThmD": _check_thmd,
    "ThmE": _check_thme,
    "Thm1": _check_thm1,
    "Thm3_1": _check_thm3_1,
    "Lem1_1": _check_lem1_1,
    "Lem1_2": _check_lem1_2,
    "Lem1_22": _check_lem1_22,
    "Lem3A_l3": lambda f: _check_lem3a(f, 3),
    "Lem3A_l4": lambda f: _check_lem3a(f, 4),
    "ComponentsWB": _check_components_wb,
}


def _eval_graph_chunk(args: tuple[list[str], tuple[str, ...]]) -> dict:
    from .graphio import from_graph6

    g6_list, checks = args
    cache = GammaCache()
    agg: dict[str, list] = {c: [0, 0, 0, 0, []] for c in checks}
    for g6 in g6_list:
        f = GraphFacts(from_graph6(g6), cache)
        for c in checks:
            status, diag = _PER_GRAPH_IMPL[c](f)
            row = agg[c]
            if status == "skip":
                row[3] += 1
                continue
            row[0] += 1
            if status == "pass":
                row[1] += 1
            else:
                row[2] += 1
                entry = {"graph6": g6}
                if diag:
                    entry.update(diag)
                row[4].append(entry)
    return agg


# -- randomized coalescence checks -------------------------------------------


def _criticality_rich_pool() -> list[Graph]:
    # uniform G(n, p) draws are almost never critical, which would leave the
    # interesting directions of the coalescence checks vacuous; mixing in the
    # small critical and weak bicritical shapes keeps them exercised
    from .families import cocktail_party_graph
    from .graph import complement, complete_graph, disjoint_union, path_graph

    return [
        cocktail_party_graph(2),
        cocktail_party_graph(3),
        complement(disjoint_union([complete_graph(2), complete_graph(3)])),
        complement(disjoint_union([complete_graph(2), path_graph(3)])),
    ]


def coalescence_pairs(seed: int, count: int) -> list[tuple[Graph, Graph]]:
    """Seeded random connected pairs (orders 2..6) for the coalescence checks."""
    rng = random.Random(seed)
    pool = _criticality_rich_pool()
    out = []

    def draw() -> Graph:
        if rng.random() < 0.3:
            return pool[rng.randrange(len(pool))]
        n = rng.randint(2, 6)
        return random_connected_graph(rng, n, rng.uniform(0.3, 0.9))

    for _ in range(count):
        out.append((draw(), draw()))
    return out


def _eval_pair_chunk(args: tuple[list[tuple[str, str]], tuple[str, ...]]) -> dict:
    from .graphio import from_graph6

    encoded, checks = args
    cache = GammaCache()
    agg: dict[str, list] = {c: [0, 0, 0, 0, []] for c in checks}

    def record(check: str, ok: bool, diag: dict) -> None:
        row = agg[check]
        row[0] += 1
        if ok:
            row[1] += 1
        else:
            row[2] += 1
            row[4].append(diag)

    def skip(check: str) -> None:
        agg[check][3] += 1

    for h1_g6, h2_g6 in encoded:
        h1 = from_graph6(h1_g6)
        h2 = from_graph6(h2_g6)
        part1 = vertex_partition(h1, cache=cache)
        part2 = vertex_partition(h2, cache=cache)
        crit1 = not part1.zero and not part1.plus
        crit2 = not part2.zero and not part2.plus
        weak1 = is_weak_bicritical(h1, cache=cache)
        weak2 = is_weak_bicritical(h2, cache=cache)
        g1 = gamma(h1, cache=cache)
        g2 = gamma(h2, cache=cache)
        minus1 = set(part1.minus)
        minus2 = set(part2.minus)
        for x1 in range(h1.n):
            for x2 in range(h2.n):
                res = coalesce(h1, x1, h2, x2)
                g = res.graph
                base = {
                    "h1": h1_g6,
                    "h2": h2_g6,
                    "x1": x1,
                    "x2": x2,
                    "graph6": _g6(g),
                }
                gg = gamma(g, cache=cache)
                conds = (crit1 and weak2 and x2 in minus2) or (
                    crit2 and weak1 and x1 in minus1
                )
                weak_g = None
                if "Thm2_1_fwd" in agg:
                    weak_g = is_weak_bicritical(g, cache=cache)
                    if not weak_g:
                        skip("Thm2_1_fwd")
                    else:
                        ok = conds and gg == g1 + g2 - 1
                        record(
                            "Thm2_1_fwd",
                            ok,
                            {**base, "conditions": conds, "gamma": gg},
                        )
                if "Thm2_1_bwd" in agg:
                    if not conds:
                        skip("Thm2_1_bwd")
                    else:
                        if weak_g is None:
                            weak_g = is_weak_bicritical(g, cache=cache)
                        record(
                            "Thm2_1_bwd",
                            weak_g,
                            {**base, "weak_bicritical": weak_g},
                        )
                if "Lem1_3" in agg:
                    ok = g1 + g2 - 1 <= gg <= g1 + g2
                    if (x1 in minus1 or x2 in minus2) and gg != g1 + g2 - 1:
                        ok = False
                    diag = {**base, "gamma": gg, "gamma_parts": [g1, g2]}
                    if ok and x1 in minus1 and x2 in minus2:
                        minus_g = set(
                            vertex_partition(g, cache=cache).minus
                        )
                        expected = (
                            {res.map1[v] for v in minus1 if v != x1}
                            | {res.map2[v] for v in minus2 if v != x2}
                            | {res.merged_vertex}
                        )
                        if minus_g != expected:
                            ok = False
                            diag["minus_actual"] = sorted(minus_g)
                            diag["minus_expected"] = sorted(expected)
                        else:
                            crit_g = is_critical(g, cache=cache)
                            if crit_g != (crit1 and crit2):
                                ok = False
                                diag["critical_mismatch"] = crit_g
                    record("Lem1_3", ok, diag)
    return agg


# -- family-generated check ---------------------------------------------------


def _check_obs_1_2_1(order_cap: int) -> TheoremCheck:
    """Coalescing two chain members at diametrical vertices yields exactly
    the chain members of the combined parameter, per split."""
    failures = []
    hyp = 0
    passed = 0
    for k in (3, 4):
        expected = {
            canonical_key(inst.graph): inst.graph
            for inst in enumerate_Fk(k, order_cap)
        }
        for k1 in range(2, k):
            k2 = k + 1 - k1
            got: dict[bytes, Graph] = {}
            for h1 in enumerate_Fk(k1, order_cap - 3):
                for h2 in enumerate_Fk(k2, order_cap - h1.n + 1):
                    if h1.n + h2.n - 1 > order_cap:
                        continue
                    for u1 in diametrical_vertices(h1.graph):
                        for u2 in diametrical_vertices(h2.graph):
                            g = coalesce(h1.graph, u1, h2.graph, u2).graph
                            got.setdefault(canonical_key(g), g)
            hyp += len(expected.keys() | got.keys())
            if expected.keys() == got.keys():
                passed += len(expected)
            else:
                for key in sorted(expected.keys() ^ got.keys()):
                    side = "chain_only" if key in expected else "coalescence_only"
                    graph = expected.get(key) or got[key]
                    failures.append(
                        {"graph6": _g6(graph), "k": k, "split": [k1, k2], "side": side}
                    )
    status = "fail" if failures else ("pass" if hyp else "skipped")
    return TheoremCheck(
        theorem_id="Obs1_2_1",
        status=status,
        hypothesis_count=hyp,
        pass_count=passed,
        fail_count=len(failures),
        skipped_count=0,
        counterexamples=failures,
    )


# -- scan driver ---------------------------------------------------------------


def _chunks(seq: list, size: int) -> list[list]:
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def _merge(rows: Iterable[dict], checks: tuple[str, ...]) -> dict[str, list]:
    total: dict[str, list] = {c: [0, 0, 0, 0, []] for c in checks}
    for row in rows:
        for c in checks:
            for i in range(4):
                total[c][i] += row[c][i]
            total[c][4].extend(row[c][4])
    return total


def _finalize(check_id: str, row: list) -> TheoremCheck:
    hyp, passed, failed, skipped, failures = row
    failures = sorted(failures, key=lambda d: json.dumps(d, sort_keys=True))
    status = "fail" if failed else ("pass" if hyp else "skipped")
    return TheoremCheck(
        theorem_id=check_id,
        status=status,
        hypothesis_count=hyp,
        pass_count=passed,
        fail_count=failed,
        skipped_count=skipped,
        counterexamples=failures,
    )


def run_scan(config: ScanConfig) -> list[TheoremCheck]:
    """Run the requested checks; deterministic for a fixed config regardless
    of the parallelism degree."""
    config.validate()
    results: list[TheoremCheck] = []

    graph_checks = tuple(t for t in config.theorems if t in PER_GRAPH_CHECKS)
    if graph_checks:
        if config.graph_file is not None:
            from pathlib import Path

            from .graphio import from_graph6

            g6s = []
            for line in Path(config.graph_file).read_text().splitlines():
                if line.strip():
                    g = from_graph6(line)
                    if not config.connected_only or is_connected(g):
                        g6s.append(to_graph6(g))
        else:
            g6s = [
                to_graph6(g)
                for g in graphs_up_to(
                    config.n_max, connected_only=config.connected_only
                )
            ]
        chunk_size = max(1, len(g6s) // (config.jobs * 8) + 1)
        tasks = [(chunk, graph_checks) for chunk in _chunks(g6s, chunk_size)]
        if config.jobs == 1:
            rows = [_eval_graph_chunk(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                rows = list(pool.map(_eval_graph_chunk, tasks))
        merged = _merge(rows, graph_checks)
        results.extend(_finalize(c, merged[c]) for c in graph_checks)

    pair_checks = tuple(t for t in config.theorems if t in PAIR_CHECKS)
    if pair_checks:
        pairs = [
            (to_graph6(h1), to_graph6(h2))
            for h1, h2 in coalescence_pairs(config.seed, config.pairs)
        ]
        chunk_size = max(1, len(pairs) // (config.jobs * 8) + 1)
        tasks = [(chunk, pair_checks) for chunk in _chunks(pairs, chunk_size)]
        if config.jobs == 1:
            rows = [_eval_pair_chunk(t) for t in tasks]
        else:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                rows = list(pool.map(_eval_pair_chunk, tasks))
        merged = _merge(rows, pair_checks)
        results.extend(_finalize(c, merged[c]) for c in pair_checks)

    if "Obs1_2_1" in config.theorems:
        results.append(_check_obs_1_2_1(config.family_order_cap))

    if "ThmB" in config.theorems:
        results.append(
            TheoremCheck(
                theorem_id="ThmB",
                status="skipped",
                hypothesis_count=0,
                pass_count=0,
                fail_count=0,
                skipped_count=0,
                note=(
                    "existential claim over constructions published elsewhere; "
                    "not mechanically checkable here"
                ),
            )
        )

    results.sort(key=lambda c: ALL_CHECKS.index(c.theorem_id))
    return results


def report_json(checks: list[TheoremCheck], config: ScanConfig) -> str:
    """Serialize a scan deterministically; the parallelism degree is
    deliberately not part of the report."""
    doc = {
        "config": {
            "n_max": config.n_max,
            "connected_only": config.connected_only,
            "theorems": list(config.theorems),
            "seed": config.seed,
            "pairs": config.pairs,
            "family_order_cap": config.family_order_cap,
            "graph_file": config.graph_file,
        },
        "results": [c.to_json() for c in checks],
        "failures_total": sum(c.fail_count for c in checks),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
