"""Constructive linear-arboricity upper bounds for even-regular graphs.

Pipeline: decompose a 2k-regular graph into k spanning cycle sets, select
a sparse cycle-breaking transversal through an integer circulation with
lower bounds (or an exact search when the outright degree bound is
required), split the residue and the transversal into linear forests, and
emit a certificate that an independent verifier re-checks from raw data.
"""

__version__ = "0.1.0"

from .embed import EmbeddedGraph, EmbeddingSpec, EmbedError, embed, verify_embedding
from .factorize import (
    Factor,
    TwoFactorization,
    factorization_from_cycles,
    two_factorize,
    verify_two_factorization,
)
from .flow import (
    UNBOUNDED,
    Arc,
    FlowNetwork,
    FlowSolution,
    check_flow,
    feasible_circulation,
    max_flow,
)
from .forest import (
    DecomposeOptions,
    DecompositionCertificate,
    PipelineError,
    certificate_to_json,
    decompose,
    decompose_h,
    residual_forests,
)
from .generators import (
    GenerationError,
    GenSpec,
    generate,
    named_graph,
    random_regular_with_girth,
)
from .graph import (
    Graph,
    GraphFormatError,
    girth,
    graph_digest,
    is_regular,
    max_degree,
    parse_graph,
    serialize_graph,
)
from .transversal import (
    Exhausted,
    Infeasible,
    RegimeError,
    RegimePlan,
    Transversal,
    build_network,
    candidate_plans,
    plan_regime,
    solve_paper,
    solve_strict,
    verify_transversal,
)
from .verify import (
    LowerBoundOnly,
    VerificationReport,
    oracle_la,
    oracle_transversal,
    verify_certificate,
)

__all__ = [
    "__version__",
    "Graph",
    "GraphFormatError",
    "girth",
    "graph_digest",
    "is_regular",
    "max_degree",
    "parse_graph",
    "serialize_graph",
    "GenSpec",
    "GenerationError",
    "generate",
    "named_graph",
    "random_regular_with_girth",
    "Factor",
    "TwoFactorization",
    "two_factorize",
    "factorization_from_cycles",
    "verify_two_factorization",
    "UNBOUNDED",
    "Arc",
    "FlowNetwork",
    "FlowSolution",
    "max_flow",
    "feasible_circulation",
    "check_flow",
    "RegimePlan",
    "RegimeError",
    "Transversal",
    "Infeasible",
    "Exhausted",
    "candidate_plans",
    "plan_regime",
    "build_network",
    "solve_paper",
    "solve_strict",
    "verify_transversal",
    "DecomposeOptions",
    "DecompositionCertificate",
    "PipelineError",
    "decompose",
    "decompose_h",
    "residual_forests",
    "certificate_to_json",
    "EmbeddingSpec",
    "EmbeddedGraph",
    "EmbedError",
    "embed",
    "verify_embedding",
    "VerificationReport",
    "LowerBoundOnly",
    "verify_certificate",
    "oracle_la",
    "oracle_transversal",
]
