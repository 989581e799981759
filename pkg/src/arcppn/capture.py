"""Acceleration-limited capture analysis.

A lateral-acceleration ceiling alpha (m/s^2) converts to an arc-length
curvature ceiling alpha_s = alpha / max(v^2); the engagement stays flyable
within the limit iff the peak commanded curvature never exceeds alpha_s.
Solving that inequality for the initial leading angle gives the analytic
admissible set; a saturated-simulation sweep maps the same boundary
empirically.

Note the admissible set concerns flying the nominal profile within the
limit.  With the command simply clamped at the limit, a stationary target
is still eventually captured from almost every initial angle (the clamped
turn survives the detour and re-converges), so the sweep classifies capture
and limit compliance separately; boundary angles are detected from the
compliance flag, which flips exactly where the unsaturated command first
exceeds the ceiling.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import _core
from .closed_form import ClosedFormInputs, flight_path_length
from .errors import DomainError
from .kinematics import GuidanceParams
from .simulate import SimConfig

__all__ = [
    "CaptureRegion",
    "CaptureSweep",
    "ManeuverLimit",
    "SaturationPolicy",
    "SweepPoint",
    "alpha_s_of",
    "capture_region_analytic",
    "capture_region_empirical",
    "full_capture_min_range",
    "max_initial_speed_for_full_capture",
]


def alpha_s_of(alpha: float, v_max: float) -> float:
    """Curvature ceiling alpha / v_max^2 (1/m) for a lateral-acceleration
    ceiling alpha (m/s^2) at the largest anticipated speed."""
    if not (alpha > 0.0 and v_max > 0.0):
        raise ValueError(f"alpha and v_max must be positive, got {alpha}, {v_max}")
    return alpha / (v_max * v_max)


@dataclass(frozen=True)
class ManeuverLimit:
    """Lateral acceleration ceiling and the speed it is referenced to.

    With a monotonically decaying speed profile the largest anticipated
    speed is the initial one, so v_max is typically v0.
    """

    alpha: float
    v_max: float

    def __post_init__(self):
        alpha_s_of(self.alpha, self.v_max)  # validates positivity

    @property
    def alpha_s(self) -> float:
        return alpha_s_of(self.alpha, self.v_max)


@dataclass(frozen=True)
class SaturationPolicy:
    """Command clamp derived from a maneuver limit.

    The time-domain simulator clamps |a_cmd| to alpha; the arc-length
    simulator clamps |k_cmd| to alpha_s.  The commanded magnitude never
    exceeds the respective bound.
    """

    limit: ManeuverLimit

    def acceleration_bound(self) -> float:
        return self.limit.alpha

    def curvature_bound(self) -> float:
        return self.limit.alpha_s


@dataclass(frozen=True)
class CaptureRegion:
    """Admissible initial leading angles |theta_m0| under a curvature limit.

    intervals are closed [low, high] magnitude bands in radians within
    [0, pi); full means every angle short of 180 deg is admissible (the
    exact tail-away angle is never capturable).
    """

    intervals: tuple[tuple[float, float], ...]
    full: bool

    def contains(self, theta_m0: float) -> bool:
        mag = abs(theta_m0)
        if mag >= math.pi:
            return False
        if self.full:
            return True
        return any(lo <= mag <= hi for lo, hi in self.intervals)


def capture_region_analytic(
    r0: float, limit: ManeuverLimit, gain: GuidanceParams
) -> CaptureRegion:
    """Admissible set from the closed-form peak-curvature bound (N > 2).

    With c = r0 alpha_s / N: full capture when c >= 1; otherwise
    |theta_m0| <= asin(c) or |theta_m0| >= pi - asin(c^(N-1)).  (On the
    second quadrant the sine inequality resolves through pi minus the
    principal arcsine.)
    """
    if not r0 > 0.0:
        raise ValueError(f"initial distance must be positive, got {r0}")
    if not gain.gain > 2.0:
        raise DomainError("capture-region analysis requires N > 2")
    c = r0 * limit.alpha_s / gain.gain
    if c >= 1.0:
        return CaptureRegion(intervals=((0.0, math.pi),), full=True)
    low_edge = math.asin(c)
    high_edge = math.pi - math.asin(c ** (gain.gain - 1.0))
    return CaptureRegion(intervals=((0.0, low_edge), (high_edge, math.pi)), full=False)


def full_capture_min_range(gain: GuidanceParams, limit: ManeuverLimit) -> float:
    """Smallest r0 with a full capture region: N / alpha_s (m).

    The worst-case peak command over all initial angles is N/r0 (reached at
    |theta_m0| = 90 deg), so the limit never binds iff N/r0 <= alpha_s.
    """
    if not gain.gain > 2.0:
        raise DomainError("capture-region analysis requires N > 2")
    return gain.gain / limit.alpha_s


def max_initial_speed_for_full_capture(r0: float, gain: GuidanceParams, alpha: float) -> float:
    """Largest initial speed keeping the capture region full at fixed r0:
    sqrt(r0 alpha / N) (m/s); equivalent to r0 >= N/alpha_s."""
    if not (r0 > 0.0 and alpha > 0.0):
        raise ValueError("r0 and alpha must be positive")
    if not gain.gain > 2.0:
        raise DomainError("capture-region analysis requires N > 2")
    return math.sqrt(r0 * alpha / gain.gain)


@dataclass(frozen=True)
class SweepPoint:
    """One saturated-simulation sweep sample."""

    theta_deg: float
    classification: str  # capture | capture_saturated | escape | horizon
    limiting_k: float  # peak unclamped curvature demand seen in flight (1/m)
    analytic_inside: bool
    miss_distance: float

    @property
    def captured(self) -> bool:
        return self.classification.startswith("capture")

    @property
    def within_limit(self) -> bool:
        return self.classification == "capture"


@dataclass(frozen=True)
class CaptureSweep:
    """Saturated-sweep classification over (0, 180) deg."""

    points: tuple[SweepPoint, ...]
    boundaries_deg: tuple[float, ...]
    region: CaptureRegion

    def inconclusive(self) -> tuple[SweepPoint, ...]:
        return tuple(p for p in self.points if p.classification == "horizon")


def _sweep_config(
    r0: float,
    theta_deg: float,
    limit: ManeuverLimit,
    gain: GuidanceParams,
    kill_radius: float,
    arc_step: float,
) -> SimConfig:
    inputs = ClosedFormInputs(r0=r0, theta_m0=math.radians(theta_deg), q0=0.0, gain=gain)
    # budget: generous multiple of the unsaturated path, plus slack for the
    # wider clamped detours near the tail-away end
    try:
        path_scale = flight_path_length(inputs, rel_tol=1e-8)
    except DomainError:
        path_scale = 40.0 * r0
    max_steps = int((3.0 * path_scale + 20.0 * r0) / arc_step)
    return SimConfig(
        inputs=inputs,
        kill_radius=kill_radius,
        arc_step=arc_step,
        max_steps=max_steps,
        saturation=SaturationPolicy(limit),
        log_every=max(max_steps, 1),
    )


def _classify_point(cfg: SimConfig) -> tuple[str, float, float]:
    curvature_limit = cfg.saturation.curvature_bound()
    _, status, miss, _, _, _, _, min_r, _, max_demand, saturated = _core.arc_kernel(
        cfg.inputs.r0,
        cfg.inputs.theta_m0,
        cfg.inputs.q0,
        cfg.inputs.n,
        cfg.arc_step,
        cfg.kill_radius,
        cfg.max_steps,
        curvature_limit,
        0.0,  # no divergence radius: saturated detours legitimately range far
        cfg.log_every,
    )
    if status == _core.codes.INTERCEPT:
        label = "capture_saturated" if saturated else "capture"
    elif status == _core.codes.DIVERGED:
        label = "escape"
    else:
        label = "horizon"
        miss = min_r
    return label, float(max_demand), float(miss)


def capture_region_empirical(
    r0: float,
    limit: ManeuverLimit,
    gain: GuidanceParams,
    resolution_deg: float = 0.25,
    kill_radius: float = 1.0,
    arc_step: float = 1.0,
    workers: int = 1,
) -> CaptureSweep:
    """Map the capture region by saturated arc-length simulation.

    Sweeps theta_m0 over (0, 180) deg at the given resolution, one clamped
    simulation per grid point, and classifies each run: capture vs escape by
    refined miss against the kill radius, plus whether the clamp ever
    engaged.  Runs that exhaust their step budget are flagged "horizon",
    never silently classified.  Detected boundary angles are the midpoints
    of grid edges where limit compliance flips; they track the analytic
    region edges to within one grid step.
    """
    if not resolution_deg > 0.0:
        raise ValueError(f"resolution must be positive, got {resolution_deg}")
    region = capture_region_analytic(r0, limit, gain)
    thetas = []
    k = 1
    while k * resolution_deg < 180.0:
        thetas.append(k * resolution_deg)
        k += 1
    configs = [
        _sweep_config(r0, theta, limit, gain, kill_radius, arc_step) for theta in thetas
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_classify_point, configs))
    else:
        results = [_classify_point(cfg) for cfg in configs]
    points = tuple(
        SweepPoint(
            theta_deg=theta,
            classification=label,
            limiting_k=max_demand,
            analytic_inside=region.contains(math.radians(theta)),
            miss_distance=miss,
        )
        for theta, (label, max_demand, miss) in zip(thetas, results)
    )
    boundaries = []
    for left, right in zip(points, points[1:]):
        if left.within_limit != right.within_limit:
            boundaries.append(0.5 * (left.theta_deg + right.theta_deg))
    return CaptureSweep(points=points, boundaries_deg=tuple(boundaries), region=region)
