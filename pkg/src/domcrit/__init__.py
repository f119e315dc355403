"""domcrit: exact domination numbers, criticality profiles, and the extremal
families of small graphs, with a mechanical verification harness."""

from .graph import (
    Graph,
    VertexId,
    INFINITY,
    MAX_VERTICES,
    CoalescenceResult,
    VertexDeletion,
    blocks,
    coalesce,
    complement,
    complete_graph,
    components,
    cut_vertices,
    cycle_graph,
    delete_vertices,
    diameter,
    diametrical_vertices,
    disjoint_union,
    distance,
    distance_layer,
    eccentricity,
    is_connected,
    path_graph,
)
from .domination import (
    DominationResult,
    GammaCache,
    GammaSetBudgetError,
    all_gamma_sets,
    brute_force_gamma,
    domination_number,
    gamma,
    gamma_after_delete,
    is_dominating_set,
)
from .criticality import (
    CriticalityProfile,
    SufficientPair,
    VertexClass,
    classify_vertex,
    criticality_profile,
    find_sufficient_pairs,
    is_bicritical,
    is_critical,
    is_k_critical,
    is_weak_bicritical,
    neighborhood_containment_pairs,
    vertex_partition,
)
from .families import (
    FamilyInstance,
    FkParams,
    Fstar2Variant,
    build_Fk,
    build_Fpp3,
    build_Fstar2,
    build_Fstar_k,
    enumerate_Fk,
    enumerate_Fstar_k,
    identifiable_vertices,
    recognize_Fk,
    recognize_Fstar_k,
)
from .graphio import from_edgelist, from_graph6, to_edgelist, to_graph6
from .iso import are_isomorphic, canonical_form, canonical_graph
from .verify import ScanConfig, TheoremCheck, run_scan

__version__ = "0.1.0"
