"""Finiteness of Neron models of r-torsion Picard schemes, decided from
combinatorial reduction data.

The library takes the dual graph of the special fibre of a semistable
reduction -- a connected multigraph with per-vertex genera and per-edge
thicknesses and stabilizer orders -- and computes the component group,
its r-torsion, the circuit and thickness invariants c and t, the base
change indices m2 and m3, and the finiteness verdicts for the r-torsion
Picard scheme and for torsors of r-th roots of a line bundle.  All
arithmetic is exact.
"""

from .errors import (
    BadModulus,
    BoundsTooLarge,
    DanglingEndpoint,
    DimensionMismatch,
    Disconnected,
    DuplicateId,
    InvalidReductionData,
    MalformedSpectrum,
    MissingMultidegree,
    NeronGraphError,
    NotACycle,
    ParseError,
    SemistabilityRequired,
    StabilizerMismatch,
    TooManyCircuits,
    UnknownEdge,
)
from .graph import (
    DEFAULT_CIRCUIT_LIMIT,
    Circuit,
    Edge,
    MultiGraph,
    OrientedCycleVector,
    betti1,
    build_graph,
    enumerate_circuits,
    fundamental_cycle_basis,
    is_nonseparating,
    is_r_divided,
    signed_common_edges,
    thickness_subdivision,
    total_genus,
)
from .homology import (
    IntMatrix,
    SmithDecomposition,
    boundary_matrix,
    coboundary_matrix,
    image_contains_mod,
    intersection_matrix,
    kernel_generators_mod,
    smith_normal_form,
    solve_mod,
    subgroup_contained_mod,
)
from .component_group import (
    AbelianGroup,
    coboundary_witness,
    homological_criterion,
    is_full_r_torsion,
    phi_group,
    phi_r_torsion,
    spanning_tree_count,
)
from .invariants import (
    AnalysisReport,
    ReductionData,
    analyze,
    circuit_invariant_c,
    divisibility_chain,
    group_neron_finite,
    index_m2,
    index_m3,
    lorenzini_sufficient,
    thickness_invariant_t,
    torsion_count_special,
    torsion_count_twisted,
    torsor_neron_finite,
    twisted_roots_finite,
)
from .fixtures import FIXTURE_NAMES, fixture, paper_fixtures
from .enumeration import (
    EquivalenceReport,
    connected_multigraphs,
    random_connected_multigraph,
    verify_equivalence,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AnalysisReport",
    "BadModulus",
    "BoundsTooLarge",
    "Circuit",
    "DEFAULT_CIRCUIT_LIMIT",
    "DanglingEndpoint",
    "DimensionMismatch",
    "Disconnected",
    "DuplicateId",
    "Edge",
    "EquivalenceReport",
    "FIXTURE_NAMES",
    "IntMatrix",
    "InvalidReductionData",
    "MalformedSpectrum",
    "MissingMultidegree",
    "MultiGraph",
    "NeronGraphError",
    "NotACycle",
    "OrientedCycleVector",
    "ParseError",
    "ReductionData",
    "SemistabilityRequired",
    "SmithDecomposition",
    "StabilizerMismatch",
    "TooManyCircuits",
    "UnknownEdge",
    "analyze",
    "betti1",
    "boundary_matrix",
    "build_graph",
    "circuit_invariant_c",
    "coboundary_matrix",
    "coboundary_witness",
    "connected_multigraphs",
    "divisibility_chain",
    "enumerate_circuits",
    "fixture",
    "fundamental_cycle_basis",
    "group_neron_finite",
    "homological_criterion",
    "image_contains_mod",
    "index_m2",
    "index_m3",
    "intersection_matrix",
    "is_full_r_torsion",
    "is_nonseparating",
    "is_r_divided",
    "kernel_generators_mod",
    "lorenzini_sufficient",
    "paper_fixtures",
    "phi_group",
    "phi_r_torsion",
    "random_connected_multigraph",
    "signed_common_edges",
    "smith_normal_form",
    "solve_mod",
    "spanning_tree_count",
    "subgroup_contained_mod",
    "thickness_invariant_t",
    "thickness_subdivision",
    "torsion_count_special",
    "torsion_count_twisted",
    "torsor_neron_finite",
    "total_genus",
    "twisted_roots_finite",
    "verify_equivalence",
]
