"""Exact Steiner distances, dominating sets, and automorphism-group
experiments in hypercube graphs, at dimensions small enough to verify
everything directly.
"""

from .cube import (
    Dimension,
    Edge,
    VertexSet,
    all_edges,
    edge_between,
    hamming_distance,
    neighbors,
    parity,
    parity_class,
    parse_vertex,
    vertex_to_string,
)
from .autgroup import (
    Automorphism,
    apply_edge,
    apply_vertex,
    compose,
    double_flip,
    element_to_text,
    enumerate_group,
    group_order,
    identity,
    inverse,
    parse_element,
    rotation,
    sample_uniform,
    verify_sharp_edge_transitivity,
)
from .steiner import (
    SteinerInstance,
    SteinerTree,
    load_instance,
    parse_instance_text,
    shortest_path,
    steiner_brute_oracle,
    steiner_exact,
    validate_tree,
)
from .domination import (
    DominatingSetCertificate,
    certificate_to_text,
    exact_connected_dominating_set,
    exact_connected_domination_number,
    exact_domination_number,
    greedy_dominating_set,
    hamming_code_dominating_set,
    induced_components,
    is_connected_subset,
    is_dominating,
    sphere_covering_floor,
    steinerize,
)
from .bounds import (
    BootstrapCase,
    BoundsReport,
    IntersectionExperiment,
    IntersectionSummary,
    SdiamReport,
    best_connected_dominating_set,
    bootstrap_case,
    build_bounds_report,
    build_intersection_experiment,
    lower_bound_even,
    mirror_set,
    run_intersection_experiment,
    sdiam_sandwich,
    trivial_lower_floor,
    upper_bound_tree,
    verify_bootstrap,
)
from .errors import DEFAULT_BUDGET, BudgetExceededError, ParseError

__all__ = [
    "BootstrapCase",
    "BoundsReport",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "Dimension",
    "DominatingSetCertificate",
    "Edge",
    "IntersectionExperiment",
    "IntersectionSummary",
    "ParseError",
    "SdiamReport",
    "SteinerInstance",
    "SteinerTree",
    "VertexSet",
    "Automorphism",
    "all_edges",
    "apply_edge",
    "apply_vertex",
    "best_connected_dominating_set",
    "bootstrap_case",
    "build_bounds_report",
    "build_intersection_experiment",
    "certificate_to_text",
    "compose",
    "double_flip",
    "edge_between",
    "element_to_text",
    "enumerate_group",
    "exact_connected_dominating_set",
    "exact_connected_domination_number",
    "exact_domination_number",
    "greedy_dominating_set",
    "group_order",
    "hamming_code_dominating_set",
    "hamming_distance",
    "identity",
    "induced_components",
    "inverse",
    "is_connected_subset",
    "is_dominating",
    "load_instance",
    "lower_bound_even",
    "mirror_set",
    "neighbors",
    "parity",
    "parity_class",
    "parse_element",
    "parse_instance_text",
    "parse_vertex",
    "rotation",
    "run_intersection_experiment",
    "sample_uniform",
    "sdiam_sandwich",
    "shortest_path",
    "sphere_covering_floor",
    "steiner_brute_oracle",
    "steiner_exact",
    "steinerize",
    "trivial_lower_floor",
    "upper_bound_tree",
    "validate_tree",
    "verify_bootstrap",
    "verify_sharp_edge_transitivity",
    "vertex_to_string",
]
