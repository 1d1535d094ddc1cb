"""Relay placement for two-tiered wireless sensor networks."""

from ._core import (
    ChosenPosition,
    CoverAlgorithm,
    CoverSolution,
    Deployment,
    Metrics,
    NodeKind,
    OracleLimits,
    PipelineConfig,
    PlacementMethod,
    Point,
    PositionKind,
    PossiblePosition,
    Relay,
    RelayRole,
    RunResult,
    Scenario,
    TopologyEdge,
    TopologyGraph,
    TopologyNode,
    WeightConfig,
    build_topology,
    circle_intersections,
    coverage_degrees,
    enumerate_possible_positions,
    exact_min_cover,
    generate_scenario,
    geom_tol,
    grid_cover,
    is_connected,
    ilsm,
    lsaa,
    lsaadc,
    mst_steinerize,
    nearest_point_on_disc,
    nps,
    rlsa,
    rlsm,
    run_pipeline,
    scenario_from_json,
    scenario_to_json,
    solution_from_json,
    solution_to_json,
    validate_cover,
    weighted_greedy,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
