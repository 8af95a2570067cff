"""curvkit: discrete curvature toolkit for finite graphs.

Computes the normalized graph Laplacian and its gradient forms, per-vertex
girth, exact pointwise curvature under the curvature-dimension inequality,
and sampled curvature estimates under the exponential-type variant, with
generators and a CLI for verifying the girth-5 curvature bounds.
"""

from .cd import CdResult, assemble_cd_forms, cd_check, cd_curvature
from .cde import (
    CdeEstimate,
    CdeSample,
    InfeasibleFunctionError,
    NoFeasibleSampleError,
    cde_check,
    cde_estimate,
    cde_ratio,
)
from .generators import (
    BadParameterError,
    complete,
    cycle,
    path,
    petersen,
    random_tree,
    random_with_girth,
    star,
)
from .girth import GirthValue, graph_girth, has_girth_at_least, vertex_girth
from .graph import (
    DisconnectedError,
    EdgeListParseError,
    Graph,
    GraphError,
    IsolatedVertexError,
    LocalBall,
    SelfLoopError,
    VertexFunction,
    ball,
    degree,
    parse_edge_list,
    serialize_edge_list,
)
from .operators import (
    IterationTooDeepError,
    NonpositiveValueError,
    approx_equal,
    gamma,
    gamma2,
    gamma2_local,
    gamma_f_ratio,
    gamma_f_ratio_split,
    gamma_iterate,
    gamma_local,
    laplacian,
)
from .spectra import (
    NonFiniteError,
    NotEliminableError,
    schur_minimize,
    schur_minimizer,
    smallest_eigenvalue,
)
from .verify import (
    CurvatureReport,
    PreconditionFailedError,
    VertexReport,
    cd_bound_girth5,
    cd_witness_value,
    verify_cd_theorem,
    verify_cde_theorem,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "BadParameterError",
    "CdResult",
    "CdeEstimate",
    "CdeSample",
    "CurvatureReport",
    "DisconnectedError",
    "EdgeListParseError",
    "GirthValue",
    "Graph",
    "GraphError",
    "InfeasibleFunctionError",
    "IsolatedVertexError",
    "IterationTooDeepError",
    "LocalBall",
    "NoFeasibleSampleError",
    "NonFiniteError",
    "NonpositiveValueError",
    "NotEliminableError",
    "PreconditionFailedError",
    "SelfLoopError",
    "VertexFunction",
    "VertexReport",
    "approx_equal",
    "assemble_cd_forms",
    "ball",
    "cd_bound_girth5",
    "cd_check",
    "cd_curvature",
    "cd_witness_value",
    "cde_check",
    "cde_estimate",
    "cde_ratio",
    "complete",
    "cycle",
    "degree",
    "gamma",
    "gamma2",
    "gamma2_local",
    "gamma_f_ratio",
    "gamma_f_ratio_split",
    "gamma_iterate",
    "gamma_local",
    "graph_girth",
    "has_girth_at_least",
    "laplacian",
    "parse_edge_list",
    "path",
    "petersen",
    "random_tree",
    "random_with_girth",
    "schur_minimize",
    "schur_minimizer",
    "serialize_edge_list",
    "smallest_eigenvalue",
    "star",
    "verify_cd_theorem",
    "verify_cde_theorem",
    "verify_theorems",
    "vertex_girth",
]
