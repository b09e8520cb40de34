"""Strong metric dimension of connected graphs.

Exact and 2-approximate solvers built on the strong resolving graph (whose
vertex covers are exactly the strong resolving sets), a brute-force oracle,
and three hardness-gadget constructions with per-instance certificate
checks.
"""

from .cover import (
    CoverCertificate,
    CoverSolution,
    exact_min_cover,
    is_vertex_cover,
    matching_cover_2approx,
    matching_lower_bound,
)
from .gadgets import (
    CheckResult,
    GadgetCertificate,
    GadgetOutput,
    GadgetParams,
    NodeTag,
    PipelineResult,
    check_certificates,
    hardness_pipeline,
    plus_construction,
    subdivide_edges,
    tilde_construction,
)
from .graph import (
    DisconnectedGraphError,
    DistanceMatrix,
    GenerationFailed,
    Graph,
    GraphParseError,
    GraphProperties,
    TwinReport,
    apsp,
    complement,
    diameter,
    find_twins,
    gen_random_connected,
    graph_properties,
    parse_graph,
    serialize_graph,
)
from .reports import Report, approx_sdim, brute_sdim, exact_sdim, input_digest
from .resolving import (
    NodeSet,
    OracleLimitError,
    ResolutionCertificate,
    StrongResolvingGraph,
    VerificationFailure,
    brute_force_sdim,
    is_mmd_pair,
    is_strong_resolving_set,
    strong_resolving_graph,
    strongly_resolves,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CoverCertificate",
    "CoverSolution",
    "DisconnectedGraphError",
    "DistanceMatrix",
    "GadgetCertificate",
    "GadgetOutput",
    "GadgetParams",
    "GenerationFailed",
    "Graph",
    "GraphParseError",
    "GraphProperties",
    "NodeSet",
    "NodeTag",
    "OracleLimitError",
    "PipelineResult",
    "Report",
    "ResolutionCertificate",
    "StrongResolvingGraph",
    "TwinReport",
    "VerificationFailure",
    "apsp",
    "approx_sdim",
    "brute_force_sdim",
    "brute_sdim",
    "check_certificates",
    "complement",
    "diameter",
    "exact_min_cover",
    "exact_sdim",
    "find_twins",
    "gen_random_connected",
    "graph_properties",
    "hardness_pipeline",
    "input_digest",
    "is_mmd_pair",
    "is_strong_resolving_set",
    "is_vertex_cover",
    "matching_cover_2approx",
    "matching_lower_bound",
    "parse_graph",
    "plus_construction",
    "serialize_graph",
    "strong_resolving_graph",
    "strongly_resolves",
    "subdivide_edges",
    "tilde_construction",
    "__version__",
]
