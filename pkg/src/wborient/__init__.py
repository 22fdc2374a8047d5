"""Bounded well-balanced and best-balanced orientations of multigraphs.

Library plus CLI for constructing the cubic-vertex-cover reduction
instances, transforming covers and orientations into each other, and
verifying every orientation property with flow-based checkers and
brute-force oracles at desk scale.
"""

from .checks import (
    OutDegreeBounds,
    apply_eulerian_reversal,
    hub_certify_well_balanced,
    is_best_balanced,
    is_ell_bounded,
    is_well_balanced,
)
from .connectivity import PathSet, arc_disjoint_paths, lambda_directed, lambda_undirected
from .core import (
    GraphBuilder,
    MixedGraph,
    Orientation,
    cut_degree,
    degree,
    in_degree,
    induced,
    inner_edges,
    is_eulerian,
    out_degree,
    reverse_arcs,
)
from .errors import (
    FormatError,
    GenerationError,
    GraphError,
    InternalInvariantError,
    PreconditionError,
)
from .oracle import (
    EnumerationReport,
    enumerate_orientations,
    min_vertex_cover,
    nash_williams_witness,
    perturb_by_eulerian,
    random_cubic_multigraph,
)
from .reduction import (
    ConvenientizeTrace,
    CvcInstance,
    ReductionArtifact,
    build_best_balanced_instance,
    build_fixed_orientation,
    build_well_balanced_instance,
    check_root_coverage,
    convenientize,
    cover_to_orientation,
    decide_well_balanced,
    is_convenient,
    lift_orientation,
    orientation_to_cover,
    restrict_orientation,
)

__all__ = [
    "ConvenientizeTrace",
    "CvcInstance",
    "EnumerationReport",
    "FormatError",
    "GenerationError",
    "GraphBuilder",
    "GraphError",
    "InternalInvariantError",
    "MixedGraph",
    "Orientation",
    "OutDegreeBounds",
    "PathSet",
    "PreconditionError",
    "ReductionArtifact",
    "apply_eulerian_reversal",
    "arc_disjoint_paths",
    "build_best_balanced_instance",
    "build_fixed_orientation",
    "build_well_balanced_instance",
    "check_root_coverage",
    "convenientize",
    "cover_to_orientation",
    "cut_degree",
    "decide_well_balanced",
    "degree",
    "enumerate_orientations",
    "hub_certify_well_balanced",
    "in_degree",
    "induced",
    "inner_edges",
    "is_best_balanced",
    "is_convenient",
    "is_ell_bounded",
    "is_eulerian",
    "is_well_balanced",
    "lambda_directed",
    "lambda_undirected",
    "lift_orientation",
    "min_vertex_cover",
    "nash_williams_witness",
    "orientation_to_cover",
    "out_degree",
    "perturb_by_eulerian",
    "random_cubic_multigraph",
    "restrict_orientation",
    "reverse_arcs",
]

__version__ = "0.1.0"
