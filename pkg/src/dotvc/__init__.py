"""Dot-product incidence graphs on subsets of F_q^3 and their VC dimension.

Exact finite-field arithmetic, plane geometry and classifier loss,
configuration counting with predicted bands, degree pruning, shattering
witness searches, and a deterministic density-sweep harness.
"""

from .dotgraph import (
    Band,
    CountReport,
    DotGraph,
    build_graph,
    count_a,
    count_a_degenerate,
    count_c4,
    count_p5,
    count_report,
    edge_count,
    triple_count_map,
)
from .experiments import (
    CSV_HEADER,
    SweepConfig,
    SweepRecord,
    load_pointset,
    random_subset,
    run_sweep,
    save_pointset,
)
from .geometry import (
    LossReport,
    PointSet,
    decode_point,
    encode_point,
    loss,
    plane_intersection_size,
    plane_points,
)
from .gf import Field
from .prune import PruneReport, prune_both, prune_lower, prune_upper
from .shatter import (
    PacParams,
    VcResult,
    WitnessVC2,
    WitnessVC3,
    find_vc2_witness,
    find_vc3_witness,
    pac_sample_bounds,
    shatters,
    vc_dimension,
    witness_verify,
)

__all__ = [
    "Band",
    "CountReport",
    "CSV_HEADER",
    "DotGraph",
    "Field",
    "LossReport",
    "PacParams",
    "PointSet",
    "PruneReport",
    "SweepConfig",
    "SweepRecord",
    "VcResult",
    "WitnessVC2",
    "WitnessVC3",
    "build_graph",
    "count_a",
    "count_a_degenerate",
    "count_c4",
    "count_p5",
    "count_report",
    "decode_point",
    "edge_count",
    "encode_point",
    "find_vc2_witness",
    "find_vc3_witness",
    "load_pointset",
    "loss",
    "pac_sample_bounds",
    "plane_intersection_size",
    "plane_points",
    "prune_both",
    "prune_lower",
    "prune_upper",
    "random_subset",
    "run_sweep",
    "save_pointset",
    "shatters",
    "triple_count_map",
    "vc_dimension",
    "witness_verify",
]

__version__ = "0.1.0"
