"""Time-domain and arc-length-domain PPN simulators.

Two independent fixed-step RK4 integrators over different state vectors:

* time domain: (x, y, phi_m, v_m, s_m) with q_dot = -v sin(theta_m)/r and
  the PPN turn rate phi_dot = a_cmd/v, a_cmd = N v q_dot (optionally clamped);
  speed decays linearly under constant drag deceleration.
* arc-length domain: (r, theta_m, q) with r' = -cos(theta_m),
  q' = -sin(theta_m)/r and theta_m' = k_cmd - q', k_cmd = N q' (optionally
  clamped).  No speed state: geometry is independent of the speed history.

Both produce the same logged-trajectory schema, so the closed forms can be
cross-checked against either.  The stepping loops live in arcppn._core
(compiled extension with a pure-Python fallback).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence

import numpy as np

from . import _core, closed_form
from .closed_form import ClosedFormInputs
from .errors import DomainError, SimulationError
from .kinematics import PlanarVector, PolarState, SpeedProfile, cartesian_from_polar

if TYPE_CHECKING:
    from .capture import SaturationPolicy

__all__ = [
    "SimConfig",
    "SummaryMetrics",
    "TerminalEvent",
    "TerminationReason",
    "Trajectory",
    "TrajectorySample",
    "refine_terminal",
    "rk4_step",
    "simulate_arclength_domain",
    "simulate_time_domain",
    "summarize",
]


class TerminationReason(enum.Enum):
    INTERCEPT = "intercept"
    HORIZON = "horizon"
    DIVERGED = "diverged"
    SPEED_EXHAUSTED = "speed-exhausted"


_REASON_BY_CODE = {
    _core.codes.INTERCEPT: TerminationReason.INTERCEPT,
    _core.codes.HORIZON: TerminationReason.HORIZON,
    _core.codes.DIVERGED: TerminationReason.DIVERGED,
    _core.codes.SPEED_EXHAUSTED: TerminationReason.SPEED_EXHAUSTED,
}


@dataclass(frozen=True)
class SimConfig:
    """One engagement run: initial conditions, speed law, integrator settings.

    time_step is seconds, arc_step meters; max_steps bounds either
    integrator's node count.  saturation, when set, clamps the commanded
    acceleration (time domain) or curvature (arc-length domain).
    """

    inputs: ClosedFormInputs
    speed: SpeedProfile = SpeedProfile(500.0)
    target: PlanarVector = PlanarVector(0.0, 0.0)
    kill_radius: float = 0.1
    time_step: float = 1e-3
    arc_step: float = 0.1
    max_steps: int = 2_000_000
    saturation: "SaturationPolicy | None" = None
    log_every: int = 1

    def __post_init__(self):
        if not self.kill_radius > 0.0:
            raise ValueError(f"kill radius must be positive, got {self.kill_radius}")
        if not (self.time_step > 0.0 and self.arc_step > 0.0):
            raise ValueError("integration steps must be positive")
        if self.max_steps < 1 or self.log_every < 1:
            raise ValueError("max_steps and log_every must be at least 1")

    def initial_cartesian(self):
        polar = PolarState(self.inputs.r0, self.inputs.q0, self.inputs.theta_m0)
        return cartesian_from_polar(polar, self.target, self.speed.v0)


@dataclass(frozen=True)
class TrajectorySample:
    """One logged engagement sample (units as in the column docs below)."""

    t: float
    s_m: float
    pos: PlanarVector
    v_m: float
    phi_m: float
    r: float
    q: float
    theta_m: float
    q_dot: float
    q_prime: float
    k_m: float
    a_m: float


@dataclass(frozen=True)
class Trajectory:
    """Column-oriented engagement log.

    t (s), s_m (m, non-decreasing), x/y (m), v_m (m/s), phi_m (rad),
    r (m), q (rad), theta_m (rad), q_dot (rad/s), q_prime (rad/m),
    k_m (1/m, commanded curvature after any clamp), a_m (m/s^2).
    Arc-length runs reconstruct t/v_m/q_dot/a_m through the speed profile;
    samples beyond the profile's coast range carry NaN there.
    """

    t: np.ndarray
    s_m: np.ndarray
    x: np.ndarray
    y: np.ndarray
    v_m: np.ndarray
    phi_m: np.ndarray
    r: np.ndarray
    q: np.ndarray
    theta_m: np.ndarray
    q_dot: np.ndarray
    q_prime: np.ndarray
    k_m: np.ndarray
    a_m: np.ndarray

    def __len__(self) -> int:
        return self.s_m.size

    def sample(self, i: int) -> TrajectorySample:
        return TrajectorySample(
            t=float(self.t[i]),
            s_m=float(self.s_m[i]),
            pos=PlanarVector(float(self.x[i]), float(self.y[i])),
            v_m=float(self.v_m[i]),
            phi_m=float(self.phi_m[i]),
            r=float(self.r[i]),
            q=float(self.q[i]),
            theta_m=float(self.theta_m[i]),
            q_dot=float(self.q_dot[i]),
            q_prime=float(self.q_prime[i]),
            k_m=float(self.k_m[i]),
            a_m=float(self.a_m[i]),
        )

    def positions_at(self, s_values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Path position interpolated at given arc lengths."""
        return np.interp(s_values, self.s_m, self.x), np.interp(s_values, self.s_m, self.y)


@dataclass(frozen=True)
class TerminalEvent:
    """Refined end-of-run data attached to a summary."""

    reason: TerminationReason
    miss_distance: float
    t_star: float
    s_star: float


@dataclass(frozen=True)
class SummaryMetrics:
    """Scalar engagement results derived from a logged trajectory."""

    miss_distance: float
    flight_time: float
    flight_path: float
    curvature_increment: float
    max_r: float
    max_k: float
    terminal_q: float
    terminated: TerminationReason


# --- generic integration helpers ---


def rk4_step(state, rhs: Callable, h: float):
    """One classical fourth-order Runge-Kutta step of width h.

    state is any 1-D float sequence; rhs maps a state array to its
    derivative.  Raises SimulationError on a non-finite result.
    """
    y = np.asarray(state, dtype=float)
    k1 = np.asarray(rhs(y), dtype=float)
    k2 = np.asarray(rhs(y + 0.5 * h * k1), dtype=float)
    k3 = np.asarray(rhs(y + 0.5 * h * k2), dtype=float)
    k4 = np.asarray(rhs(y + h * k3), dtype=float)
    out = y + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
    if not np.all(np.isfinite(out)):
        raise SimulationError(f"non-finite state after RK4 step: {out}")
    return out


def refine_terminal(
    arclens: Sequence[float],
    ranges: Sequence[float],
    times: Sequence[float] | None = None,
) -> tuple[float, float, float]:
    """Refine the closest approach from sampled (s, r) pairs.

    Fits a parabola to r^2 over the three samples around the range minimum
    (exact for a straight-line flyby at constant speed) and returns
    (miss_distance, s_star, t_star).  Falls back to the raw minimum sample
    when the bracket is degenerate; extrapolation past the final sample is
    allowed up to one local sample spacing, which covers runs truncated just
    before closest approach.
    """
    s = np.asarray(arclens, dtype=float)
    r = np.asarray(ranges, dtype=float)
    if s.size == 0 or s.size != r.size:
        raise ValueError("need matching, non-empty arclens and ranges")
    i_min = int(np.argmin(r))
    t = None if times is None else np.asarray(times, dtype=float)

    def at(i: int) -> tuple[float, float, float]:
        ti = float(t[i]) if t is not None else math.nan
        return float(r[i]), float(s[i]), ti

    if s.size < 3:
        miss, s_star, t_star = at(i_min)
        return miss, s_star, t_star
    lo = min(max(i_min - 1, 0), s.size - 3)
    s0, s1, s2 = s[lo], s[lo + 1], s[lo + 2]
    y0, y1, y2 = r[lo] ** 2, r[lo + 1] ** 2, r[lo + 2] ** 2
    h0, h2 = s0 - s1, s2 - s1
    den = h0 * h2 * (h0 - h2)
    if den == 0.0 or not np.isfinite(den):
        miss, s_star, t_star = at(i_min)
        return miss, s_star, t_star
    a = (h2 * (y0 - y1) - h0 * (y2 - y1)) / den
    b = (h0 * h0 * (y2 - y1) - h2 * h2 * (y0 - y1)) / den
    if a <= 0.0:
        miss, s_star, t_star = at(i_min)
        return miss, s_star, t_star
    s_star = s1 - b / (2.0 * a)
    spacing = max(abs(h0), abs(h2))
    if not (s0 - spacing <= s_star <= s2 + spacing):
        miss, s_star_f, t_star = at(i_min)
        return miss, s_star_f, t_star
    miss_sq = y1 - b * b / (4.0 * a)
    miss = math.sqrt(max(miss_sq, 0.0))
    if t is not None and s2 != s1:
        t_star = float(t[lo + 1] + (s_star - s1) * (t[lo + 2] - t[lo + 1]) / (s2 - s1))
    else:
        t_star = math.nan
    return miss, float(s_star), t_star


def _wrap_array(angles: np.ndarray) -> np.ndarray:
    """Vectorized wrap to (-pi, pi], ties to +pi."""
    wrapped = np.mod(angles, 2.0 * np.pi)
    wrapped = np.where(wrapped > np.pi, wrapped - 2.0 * np.pi, wrapped)
    return wrapped


def _parabolic_peak(xs: np.ndarray, ys: np.ndarray) -> float:
    """Refined maximum of sampled ys; parabola through the 3 samples around
    an interior peak, the raw sample otherwise."""
    i = int(np.argmax(ys))
    if i == 0 or i == ys.size - 1 or ys.size < 3:
        return float(ys[i])
    x0, x1, x2 = xs[i - 1], xs[i], xs[i + 1]
    y0, y1, y2 = ys[i - 1], ys[i], ys[i + 1]
    h0, h2 = x0 - x1, x2 - x1
    den = h0 * h2 * (h0 - h2)
    if den == 0.0:
        return float(y1)
    a = (h2 * (y0 - y1) - h0 * (y2 - y1)) / den
    b = (h0 * h0 * (y2 - y1) - h2 * h2 * (y0 - y1)) / den
    if a >= 0.0:
        return float(y1)
    return float(y1 - b * b / (4.0 * a))


# --- simulators ---


def _escape_radius(cfg: SimConfig) -> float:
    """Divergence threshold: 10x the predicted maximum range, or 20x r0 when
    the turning point diverges (|theta_m0| = 180 deg).  Saturated runs get
    two clamped-turn diameters of extra slack, since their legitimate
    detours can range far beyond the unsaturated turning point."""
    try:
        radius = 10.0 * closed_form.max_relative_distance(cfg.inputs)
    except DomainError:
        radius = 20.0 * cfg.inputs.r0
    if cfg.saturation is not None:
        bound = cfg.saturation.curvature_bound()
        if bound > 0.0:
            radius += 4.0 / bound
    return radius


def _deep_radius(cfg: SimConfig) -> float:
    return 0.1 * cfg.kill_radius


def simulate_time_domain(cfg: SimConfig) -> tuple[Trajectory, SummaryMetrics]:
    """Integrate the time-domain PPN engagement; returns the logged
    trajectory and its summary."""
    start = cfg.initial_cartesian()
    accel_limit = (
        cfg.saturation.acceleration_bound() if cfg.saturation is not None else 0.0
    )
    log, status, miss, t_star, s_star, _, _, _, bracket, _, _ = _core.time_kernel(
        start.pos_m.x,
        start.pos_m.y,
        start.phi_m,
        start.v_m,
        cfg.target.x,
        cfg.target.y,
        cfg.inputs.n,
        cfg.speed.drag_decel,
        cfg.time_step,
        cfg.kill_radius,
        cfg.max_steps,
        accel_limit,
        _escape_radius(cfg),
        cfg.log_every,
    )
    if status == _core.codes.NUMERIC:
        raise SimulationError("time-domain integration produced a non-finite state")
    reason = _REASON_BY_CODE[status]
    if reason is not TerminationReason.INTERCEPT and np.all(np.isfinite(bracket)):
        miss, s_star, t_star = refine_terminal(bracket[:, 1], bracket[:, 2], bracket[:, 0])
    traj = _trajectory_from_time_log(cfg, log, accel_limit)
    event = TerminalEvent(reason, float(miss), float(t_star), float(s_star))
    return traj, summarize(traj, event)


def simulate_arclength_domain(cfg: SimConfig) -> tuple[Trajectory, SummaryMetrics]:
    """Integrate the arc-length-domain PPN engagement; returns the logged
    trajectory and its summary."""
    curvature_limit = (
        cfg.saturation.curvature_bound() if cfg.saturation is not None else 0.0
    )
    log, status, miss, _, s_star, _, _, _, bracket, _, _ = _core.arc_kernel(
        cfg.inputs.r0,
        cfg.inputs.theta_m0,
        cfg.inputs.q0,
        cfg.inputs.n,
        cfg.arc_step,
        cfg.kill_radius,
        cfg.max_steps,
        curvature_limit,
        _escape_radius(cfg),
        cfg.log_every,
    )
    if status == _core.codes.NUMERIC:
        raise SimulationError("arc-length integration produced a non-finite state")
    reason = _REASON_BY_CODE[status]
    if reason is not TerminationReason.INTERCEPT and np.all(np.isfinite(bracket[:, 1:])):
        miss, s_star, _ = refine_terminal(bracket[:, 1], bracket[:, 2])
    traj = _trajectory_from_arc_log(cfg, log, curvature_limit)
    t_star = _time_at_path(cfg.speed, float(s_star))
    event = TerminalEvent(reason, float(miss), t_star, float(s_star))
    return traj, summarize(traj, event)


def summarize(traj: Trajectory, terminal: TerminalEvent | None = None) -> SummaryMetrics:
    """Scalar metrics from a logged trajectory.

    flight_path is the refined terminal arc length for intercepts (the log
    plus the sub-step projection to closest approach), the total logged arc
    length otherwise.  The curvature increment is the trapezoidal integral
    of |k_m| over s_m, extended over the projected terminal stretch with the
    final commanded value.  max_r and max_k refine interior peaks
    parabolically.  Without an explicit terminal event the closest approach
    is refined from the log itself and the run is treated as an intercept.
    """
    if len(traj) == 0:
        raise ValueError("cannot summarize an empty trajectory")
    if terminal is None:
        miss, s_star, t_star = refine_terminal(traj.s_m, traj.r, traj.t)
        terminal = TerminalEvent(TerminationReason.INTERCEPT, miss, t_star, s_star)

    s_end = float(traj.s_m[-1])
    abs_k = np.abs(traj.k_m)
    increment = float(np.trapezoid(abs_k, traj.s_m))
    if terminal.reason is TerminationReason.INTERCEPT:
        flight_path = terminal.s_star
        flight_time = terminal.t_star
        if terminal.s_star > s_end and np.isfinite(abs_k[-1]):
            increment += float(abs_k[-1]) * (terminal.s_star - s_end)
    else:
        flight_path = s_end
        flight_time = float(traj.t[-1])
    return SummaryMetrics(
        miss_distance=terminal.miss_distance,
        flight_time=flight_time,
        flight_path=flight_path,
        curvature_increment=increment,
        max_r=_parabolic_peak(traj.s_m, traj.r),
        max_k=_parabolic_peak(traj.s_m, abs_k),
        terminal_q=float(traj.q[-1]),
        terminated=terminal.reason,
    )


# --- trajectory assembly ---


def _clamp_sym(values: np.ndarray, bound: float) -> np.ndarray:
    if bound <= 0.0:
        return values
    return np.clip(values, -bound, bound)


def _trajectory_from_time_log(cfg: SimConfig, log: np.ndarray, accel_limit: float) -> Trajectory:
    t, s, x, y, phi, v = (log[:, i].copy() for i in range(6))
    rx = cfg.target.x - x
    ry = cfg.target.y - y
    r = np.hypot(rx, ry)
    q = np.arctan2(ry, rx)
    theta = _wrap_array(phi - q)
    r_eff = np.maximum(r, _deep_radius(cfg))
    q_dot = -v * np.sin(theta) / r_eff
    a_m = _clamp_sym(cfg.inputs.n * v * q_dot, accel_limit)
    return Trajectory(
        t=t,
        s_m=s,
        x=x,
        y=y,
        v_m=v,
        phi_m=_wrap_array(phi),
        r=r,
        q=_wrap_array(q),
        theta_m=theta,
        q_dot=q_dot,
        q_prime=q_dot / v,
        k_m=a_m / (v * v),
        a_m=a_m,
    )


def _time_at_path(profile: SpeedProfile, s: float) -> float:
    if not np.isfinite(s):
        return math.nan
    drag = profile.drag_decel
    if drag == 0.0:
        return s / profile.v0
    disc = profile.v0 * profile.v0 - 2.0 * drag * s
    if disc < 0.0:
        return math.nan
    return (profile.v0 - math.sqrt(disc)) / drag


def _trajectory_from_arc_log(cfg: SimConfig, log: np.ndarray, curvature_limit: float) -> Trajectory:
    s, r, theta, q = (log[:, i].copy() for i in range(4))
    r_eff = np.maximum(r, _deep_radius(cfg))
    q_prime = -np.sin(theta) / r_eff
    k_m = _clamp_sym(cfg.inputs.n * q_prime, curvature_limit)
    phi = _wrap_array(q + theta)
    x = cfg.target.x - r * np.cos(q)
    y = cfg.target.y - r * np.sin(q)
    # clock reconstruction through the speed law (NaN past the coast range)
    drag = cfg.speed.drag_decel
    if drag == 0.0:
        t = s / cfg.speed.v0
    else:
        disc = cfg.speed.v0**2 - 2.0 * drag * s
        t = np.where(disc >= 0.0, (cfg.speed.v0 - np.sqrt(np.maximum(disc, 0.0))) / drag, np.nan)
    v = cfg.speed.v0 - drag * t
    return Trajectory(
        t=t,
        s_m=s,
        x=x,
        y=y,
        v_m=v,
        phi_m=phi,
        r=r,
        q=_wrap_array(q),
        theta_m=_wrap_array(theta),
        q_dot=q_prime * v,
        q_prime=q_prime,
        k_m=k_m,
        a_m=k_m * v * v,
    )
