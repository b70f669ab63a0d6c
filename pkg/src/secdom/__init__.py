"""Secure domination on P5-free graph classes.

Exact solvers for small instances, certified constructive algorithms with
proven size bounds for six related graph classes, generators, and codecs.
"""

from .backend import BACKEND, HAVE_COMPILED
from .construct import (
    BuildTrace,
    CLASS_BUILDERS,
    Construction,
    TraceStep,
    construct_for_class,
    secure_set_k2_2k1_free,
    secure_set_p3p1_free,
    secure_set_p3p2_free,
    secure_set_p5_c3_free,
    secure_set_p5_c4_free,
    secure_set_p5_free,
    secure_set_p5_paw_free,
)
from .errors import ClassValidationError, ConsistencyError
from .formats import (
    GraphDocument,
    decode_edge_list,
    decode_graph6,
    emit_graph,
    encode_edge_list,
    encode_graph6,
    parse_document,
    parse_graph,
)
from .generate import (
    buoy_graph,
    complete_graph,
    complete_multipartite_graph,
    cycle_expansion_graph,
    cycle_graph,
    disjoint_c5,
    labeled_graphs,
    path_graph,
    random_in_class,
    star_graph,
)
from .graph import (
    Graph,
    components,
    disjoint_union,
    induced_subgraph,
    is_clique,
    is_connected,
    is_independent,
)
from .oracle import (
    DefenseCertificate,
    SetPartition,
    defended_by,
    domination_number,
    epn,
    independence_number,
    is_dominating,
    max_independent_set,
    min_dominating_set,
    min_secure_dominating_set,
    secure_certificate,
    secure_domination_number,
    secure_failure,
    set_partition,
    undefended_set,
)
from .patterns import (
    BuoyDecomposition,
    CLASS_NAMES,
    CLASS_RULES,
    FouquetDecomposition,
    PATTERN_NAMES,
    Pattern,
    classify,
    contains_induced,
    find_buoy,
    fouquet_decompose,
    free_of,
    is_bipartite,
    is_complete_multipartite,
    pattern,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BuildTrace",
    "BuoyDecomposition",
    "CLASS_BUILDERS",
    "CLASS_NAMES",
    "CLASS_RULES",
    "ClassValidationError",
    "ConsistencyError",
    "Construction",
    "DefenseCertificate",
    "FouquetDecomposition",
    "Graph",
    "GraphDocument",
    "HAVE_COMPILED",
    "PATTERN_NAMES",
    "Pattern",
    "SetPartition",
    "TraceStep",
    "buoy_graph",
    "classify",
    "complete_graph",
    "complete_multipartite_graph",
    "components",
    "construct_for_class",
    "contains_induced",
    "cycle_expansion_graph",
    "cycle_graph",
    "decode_edge_list",
    "decode_graph6",
    "defended_by",
    "disjoint_c5",
    "disjoint_union",
    "domination_number",
    "emit_graph",
    "encode_edge_list",
    "encode_graph6",
    "epn",
    "find_buoy",
    "fouquet_decompose",
    "free_of",
    "independence_number",
    "induced_subgraph",
    "is_bipartite",
    "is_clique",
    "is_complete_multipartite",
    "is_connected",
    "is_dominating",
    "is_independent",
    "labeled_graphs",
    "max_independent_set",
    "min_dominating_set",
    "min_secure_dominating_set",
    "parse_document",
    "parse_graph",
    "path_graph",
    "pattern",
    "random_in_class",
    "secure_certificate",
    "secure_domination_number",
    "secure_failure",
    "secure_set_k2_2k1_free",
    "secure_set_p3p1_free",
    "secure_set_p3p2_free",
    "secure_set_p5_c3_free",
    "secure_set_p5_c4_free",
    "secure_set_p5_free",
    "secure_set_p5_paw_free",
    "set_partition",
    "star_graph",
    "undefended_set",
]
