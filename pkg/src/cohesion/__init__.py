"""Cohesion: a triangle-based quality score for node sets in social graphs."""

from .detection import (
    DetectionConfig,
    Egomunity,
    detect_groups,
    ego_network,
    find_cohesion_one,
    grow_group,
    max_cohesion_zero_subset,
)
from .graph import (
    EdgeListError,
    Graph,
    MixedWeightsError,
    SelfLoopError,
    WeightDomainError,
    format_edge_list,
    from_edge_list,
    node_set,
    parse_edge_list,
    read_edge_list,
)
from .metrics import (
    CohesionScore,
    clustering,
    cohesion,
    conductance,
    density,
    density_cohesion_bound,
    internal_edge_count,
    score_from_stats,
    weighted_cohesion,
)
from .models import (
    ModelSpec,
    expected_cohesion_four_groups,
    expected_cohesion_gnp,
    gen_four_groups,
    gen_gnp,
    monte_carlo_cohesion,
)
from .triangles import (
    EdgeClassPartition,
    Triangle,
    TriangleStats,
    enumerate_triangles,
    set_triangle_stats,
    triangle_connectivity_classes,
    weighted_set_triangle_stats,
)

__version__ = "0.1.0"
