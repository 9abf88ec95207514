"""Full-view barrier coverage for mobile camera sensor networks.

A numpy-backed library that plans two-row line deployments, relocates
randomly scattered mobile cameras onto a grid lattice, extracts
minimum-camera barriers from a weighted coverage graph, and runs seeded
Monte Carlo coverage experiments.
"""

from .barrier_graph import (
    SINK,
    SOURCE,
    BarrierResult,
    CoverageGraph,
    build_graph,
    distinct_cameras,
    k_barrier_count,
    prune_degree_one,
    shortest_barrier,
)
from .geometry import (
    EPS,
    TAU,
    CameraParams,
    CameraPose,
    Point2D,
    Segment,
    bearing_between,
    circular_gaps,
    covers,
    full_view_covered_point,
    full_view_covered_segment,
    max_angular_gap,
    midpoint_shortcut_covered,
    normalize_bearing,
)
from .grid_deploy import (
    CameraOutsideRegionError,
    CameraRecord,
    DeploymentPlan,
    GridModel,
    VertexAssignment,
    assign_orientations,
    assign_to_vertices,
    cell_full_view_verified,
    cell_fully_staffed,
    elect_grid_heads,
    grid_length_bound,
    partition,
    run_algorithm1,
    staffed_cells,
)
from .line_model import (
    SWING_FOV,
    DeploymentCheck,
    LineDeployment,
    LineDeploymentParams,
    camera_density,
    cameras_for_barrier,
    optimal_params,
    place_line_deployment,
    validate_params,
)
from .simulate import (
    ScenarioConfig,
    SweepResult,
    SweepRow,
    barrier_camera_count_sweep,
    barrier_exists_mobile,
    barrier_exists_static,
    coverage_probability_sweep,
    fig3_sweep,
    random_deploy,
    trial_seed,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "EPS",
    "TAU",
    "Point2D",
    "Segment",
    "CameraParams",
    "CameraPose",
    "normalize_bearing",
    "bearing_between",
    "covers",
    "circular_gaps",
    "max_angular_gap",
    "full_view_covered_point",
    "full_view_covered_segment",
    "midpoint_shortcut_covered",
    "SWING_FOV",
    "LineDeploymentParams",
    "LineDeployment",
    "DeploymentCheck",
    "optimal_params",
    "validate_params",
    "camera_density",
    "cameras_for_barrier",
    "place_line_deployment",
    "GridModel",
    "VertexAssignment",
    "CameraRecord",
    "DeploymentPlan",
    "CameraOutsideRegionError",
    "grid_length_bound",
    "partition",
    "elect_grid_heads",
    "assign_to_vertices",
    "assign_orientations",
    "run_algorithm1",
    "cell_fully_staffed",
    "staffed_cells",
    "cell_full_view_verified",
    "SOURCE",
    "SINK",
    "CoverageGraph",
    "BarrierResult",
    "build_graph",
    "prune_degree_one",
    "shortest_barrier",
    "distinct_cameras",
    "k_barrier_count",
    "ScenarioConfig",
    "SweepRow",
    "SweepResult",
    "random_deploy",
    "trial_seed",
    "barrier_exists_mobile",
    "barrier_exists_static",
    "coverage_probability_sweep",
    "barrier_camera_count_sweep",
    "fig3_sweep",
]
