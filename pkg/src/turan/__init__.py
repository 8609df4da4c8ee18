"""Turán numbers ex(K_{n_1,...,n_r}, kK_r): formulas, constructions, detector, exact oracle."""

from ._kernels import NUMBA_ENABLED
from .constructions import (
    ConstructionCertificate,
    extremal_construction,
    four_partite_triangle_construction,
    maximality_probe,
)
from .errors import (
    BudgetError,
    BudgetExhausted,
    GraphFormatError,
    ParameterError,
    PartitenessError,
    PreconditionError,
    RegimeError,
    TuranError,
)
from .formulas import (
    FormulaResult,
    Validity,
    bipartite_matching_number,
    four_partite_triangle_lower_bound,
    h_k,
    multipartite_matching_number,
    turan_number,
)
from .graph import (
    HostSpec,
    MultipartiteGraph,
    VertexId,
    complete_multipartite,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
    join,
    pair_edge_count,
)
from .identities import (
    WeightSummary,
    clique_count_lower_bound_check,
    deletion_identity_check,
    kr_free_weight_bound_check,
    weight_identity_check,
    weight_of,
    weight_summary,
)
from .oracle import Budget, ExtremalResult, extremal_number, extremal_number_general, verify_formula_grid
from .packing import CliquePacking, contains_packing, count_cliques, enumerate_transversal_cliques, find_packing

__version__ = "0.1.0"
