"""Turán and spectral Turán experiments for edge blow-ups of star forests."""

from __future__ import annotations

from ._kernels import available_backends, backend, use_backend
from .combinatorics import (
    ChenDiagnostic,
    PartitionLabeling,
    chen_diagnostic,
    chen_gap,
    crossing_edges,
    ex_formula,
    f_bruteforce,
    f_formula,
    h_edges,
    intersection_bound,
    intersection_bound_holds,
    matching_number,
    max_crossing_partition,
    turan_edges,
    turan_part_sizes,
)
from .constructions import (
    FamilyLayout,
    StarForestSpec,
    chvatal_hanson_graph,
    complete_multipartite,
    edge_blowup,
    extremal_family_member,
    family_layout,
    star,
    star_forest,
    turan,
)
from .errors import (
    BlowupLabError,
    BudgetExceededError,
    ConvergenceError,
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    Graph6Error,
    GraphValidationError,
    InfeasibleConstructionError,
    SelfLoopError,
    VerificationError,
)
from .freeness import Witness, check_witness, find_blowup_star_forest, generic_contains, is_free, pattern_graph
from .graph import (
    Graph,
    VertexSet,
    complement,
    components,
    degree,
    degrees,
    disjoint_union,
    induced_subgraph,
    join,
    make_graph,
    max_degree,
    min_degree,
)
from .report_io import decode_graph6, emit_dot, emit_report, encode_graph6, report_to_dict
from .search import (
    SearchConfig,
    VerificationReport,
    canonical_form,
    canonical_set,
    enumerate_free,
    hill_climb,
    isomorphic,
    spectral_extremal_bruteforce,
    turan_number_bruteforce,
    verify_theorem,
)
from .spectral import (
    Ordering,
    SpectralResult,
    compare_rho,
    eigen_residual,
    quotient_perron,
    quotient_rho,
    rayleigh,
    spectral_radius,
    turan_density_offset,
)

__version__ = "0.1.0"
