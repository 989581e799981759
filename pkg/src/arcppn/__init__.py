"""arcppn: planar pure-proportional-navigation guidance toolkit.

Closed-form engagement analytics in the arc-length domain (profiles,
performance metrics, acceleration-limited capture regions) for a missile of
arbitrarily time-varying speed against a stationary target, cross-validated
by two independent fixed-step simulators (time domain and arc-length
domain).  The hot integration loops live in a compiled extension with a
pure-Python fallback selected at import (arcppn._core.BACKEND says which).
"""

from ._core import BACKEND
from .capture import (
    CaptureRegion,
    CaptureSweep,
    ManeuverLimit,
    SaturationPolicy,
    SweepPoint,
    alpha_s_of,
    capture_region_analytic,
    capture_region_empirical,
    full_capture_min_range,
    max_initial_speed_for_full_capture,
)
from .closed_form import (
    ClosedFormInputs,
    ProfilePoint,
    closing_speed_at,
    curvature_at,
    curvature_increment,
    flight_path_length,
    flight_time_under_constant_drag,
    leading_angle_at,
    los_rate_at,
    max_curvature,
    max_relative_distance,
    profile,
    radius_at_leading_angle,
    terminal_impact_angle,
)
from .errors import (
    ConfigError,
    DegenerateGeometryError,
    DomainError,
    InsufficientEnergyError,
    QuadratureError,
    SimulationError,
)
from .kinematics import (
    CartesianState,
    GeneralRelativeState,
    GuidanceParams,
    PlanarVector,
    PolarState,
    SpeedProfile,
    arclength_rates,
    cartesian_from_polar,
    general_relative_rates,
    polar_from_cartesian,
    ppn_acceleration,
    ppn_curvature,
    speed_invariant_defect,
    stationary_accels_from_polar,
    stationary_accels_from_rates,
    stationary_relative_rates,
    wrap_angle,
)
from .simulate import (
    SimConfig,
    SummaryMetrics,
    TerminalEvent,
    TerminationReason,
    Trajectory,
    TrajectorySample,
    refine_terminal,
    rk4_step,
    simulate_arclength_domain,
    simulate_time_domain,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CaptureRegion",
    "CaptureSweep",
    "CartesianState",
    "ClosedFormInputs",
    "ConfigError",
    "DegenerateGeometryError",
    "DomainError",
    "GeneralRelativeState",
    "GuidanceParams",
    "InsufficientEnergyError",
    "ManeuverLimit",
    "PlanarVector",
    "PolarState",
    "ProfilePoint",
    "QuadratureError",
    "SaturationPolicy",
    "SimConfig",
    "SimulationError",
    "SpeedProfile",
    "SummaryMetrics",
    "SweepPoint",
    "TerminalEvent",
    "TerminationReason",
    "Trajectory",
    "TrajectorySample",
    "alpha_s_of",
    "arclength_rates",
    "capture_region_analytic",
    "capture_region_empirical",
    "cartesian_from_polar",
    "closing_speed_at",
    "curvature_at",
    "curvature_increment",
    "flight_path_length",
    "flight_time_under_constant_drag",
    "full_capture_min_range",
    "general_relative_rates",
    "leading_angle_at",
    "los_rate_at",
    "max_curvature",
    "max_initial_speed_for_full_capture",
    "max_relative_distance",
    "polar_from_cartesian",
    "ppn_acceleration",
    "ppn_curvature",
    "profile",
    "radius_at_leading_angle",
    "refine_terminal",
    "rk4_step",
    "simulate_arclength_domain",
    "simulate_time_domain",
    "speed_invariant_defect",
    "stationary_accels_from_polar",
    "stationary_accels_from_rates",
    "stationary_relative_rates",
    "summarize",
    "terminal_impact_angle",
    "wrap_angle",
    "__version__",
]
