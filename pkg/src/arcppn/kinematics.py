"""Planar engagement geometry and guidance kinematics.

Conventions used throughout the package:

* Angles are radians, wrapped to (-pi, pi]; degrees appear only at the CLI.
* The line of sight (LOS) runs from missile to target; its angle q is
  measured counterclockwise from the inertial x axis.
* The leading angle theta_m is measured from the LOS direction to the
  missile velocity vector, counterclockwise positive, so
  theta_m = phi_m - q with phi_m the flight-path angle.
* Primes denote derivatives with respect to missile arc length s_m;
  dots denote time derivatives.
* Path curvature k_m is signed, counterclockwise positive
  (k_m = d(phi_m)/d(s_m)), so a positive curvature turns the velocity
  vector left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateGeometryError

TWO_PI = 2.0 * math.pi


def wrap_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]; exact multiples of pi map to +pi."""
    wrapped = angle % TWO_PI  # [0, 2*pi)
    if wrapped > math.pi:
        wrapped -= TWO_PI
    return wrapped


@dataclass(frozen=True)
class PlanarVector:
    """Inertial-frame planar vector, meters."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite vector components ({self.x}, {self.y})")

    def __sub__(self, other: "PlanarVector") -> "PlanarVector":
        return PlanarVector(self.x - other.x, self.y - other.y)

    def __add__(self, other: "PlanarVector") -> "PlanarVector":
        return PlanarVector(self.x + other.x, self.y + other.y)

    def norm(self) -> float:
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class CartesianState:
    """Time-domain missile state: position (m), flight-path angle (rad),
    speed (m/s) and clock time (s)."""

    pos_m: PlanarVector
    phi_m: float
    v_m: float
    t: float = 0.0

    def __post_init__(self):
        if not self.v_m > 0.0:
            raise ValueError(f"missile speed must be positive, got {self.v_m}")
        object.__setattr__(self, "phi_m", wrap_angle(self.phi_m))


@dataclass(frozen=True)
class PolarState:
    """Arc-length-domain engagement state: relative distance r (m), LOS
    angle q (rad) and missile leading angle theta_m (rad)."""

    r: float
    q: float
    theta_m: float

    def __post_init__(self):
        if not self.r > 0.0:
            raise DegenerateGeometryError(f"relative distance must be positive, got {self.r}")
        object.__setattr__(self, "q", wrap_angle(self.q))
        object.__setattr__(self, "theta_m", wrap_angle(self.theta_m))


@dataclass(frozen=True)
class GeneralRelativeState:
    """Polar state extended with target terms for the moving-target rate
    equations: target leading angle theta_t (rad), speed ratio m = v_t/v_m,
    its arc-length derivative m_prime (1/m) and target path curvature
    k_t (1/m).  Reduces to the stationary case when m = m_prime = k_t = 0.
    """

    polar: PolarState
    theta_t: float = 0.0
    m: float = 0.0
    m_prime: float = 0.0
    k_t: float = 0.0

    def __post_init__(self):
        if self.m < 0.0:
            raise ValueError(f"speed ratio must be non-negative, got {self.m}")
        object.__setattr__(self, "theta_t", wrap_angle(self.theta_t))


@dataclass(frozen=True)
class GuidanceParams:
    """Navigation gain N of the proportional-navigation command."""

    gain: float

    def __post_init__(self):
        if not self.gain > 1.0:
            raise ValueError(f"navigation gain must exceed 1, got {self.gain}")


@dataclass(frozen=True)
class SpeedProfile:
    """Missile speed law v(t) = v0 - drag_decel * t (constant deceleration)."""

    v0: float
    drag_decel: float = 0.0

    def __post_init__(self):
        if not self.v0 > 0.0:
            raise ValueError(f"initial speed must be positive, got {self.v0}")
        if self.drag_decel < 0.0:
            raise ValueError(f"deceleration must be non-negative, got {self.drag_decel}")

    def speed_at(self, t: float) -> float:
        return self.v0 - self.drag_decel * t

    def coast_range(self) -> float:
        """Path length flown before the speed law reaches zero (inf if no drag)."""
        if self.drag_decel == 0.0:
            return math.inf
        return self.v0 * self.v0 / (2.0 * self.drag_decel)


# --- coordinate conversions ---


def polar_from_cartesian(missile: CartesianState, target_pos: PlanarVector) -> PolarState:
    """Relative polar state (r, q, theta_m) of a missile against a fixed target.

    Raises DegenerateGeometryError for coincident positions.
    """
    los = target_pos - missile.pos_m
    r = los.norm()
    if r == 0.0:
        raise DegenerateGeometryError("missile and target positions coincide")
    q = math.atan2(los.y, los.x)
    return PolarState(r=r, q=q, theta_m=wrap_angle(missile.phi_m - q))


def cartesian_from_polar(
    polar: PolarState, target_pos: PlanarVector, speed: float, t: float = 0.0
) -> CartesianState:
    """Place a missile in the inertial frame from a relative polar state."""
    pos = PlanarVector(
        target_pos.x - polar.r * math.cos(polar.q),
        target_pos.y - polar.r * math.sin(polar.q),
    )
    return CartesianState(pos_m=pos, phi_m=polar.q + polar.theta_m, v_m=speed, t=t)


# --- first-order relative rates ---


def stationary_relative_rates(state: PolarState) -> tuple[float, float]:
    """Arc-length closing rate and LOS rate (r', q') for a stationary target:
    r' = -cos(theta_m), q' = -sin(theta_m)/r."""
    return -math.cos(state.theta_m), -math.sin(state.theta_m) / state.r


def arclength_rates(state: PolarState, gain: GuidanceParams) -> tuple[float, float, float]:
    """Closed PPN arc-length dynamics (r', theta_m', q') for a stationary target.

    theta_m' = (1 - N) sin(theta_m)/r, which is (N - 1) q'.
    """
    sin_t = math.sin(state.theta_m)
    q_prime = -sin_t / state.r
    return -math.cos(state.theta_m), (1.0 - gain.gain) * sin_t / state.r, q_prime


# --- guidance commands ---


def ppn_curvature(q_prime: float, gain: GuidanceParams) -> float:
    """Arc-length PPN command: path curvature k_m = N * q' (1/m)."""
    return gain.gain * q_prime


def ppn_acceleration(v_m: float, q_dot: float, gain: GuidanceParams) -> float:
    """Time-domain PPN command: lateral acceleration a = N * v_m * q_dot (m/s^2),
    normal to the velocity and signed so that phi_m_dot = N * q_dot."""
    if not v_m > 0.0:
        raise ValueError(f"missile speed must be positive, got {v_m}")
    return gain.gain * v_m * q_dot


# --- second-order relative rates ---


def general_relative_rates(
    state: GeneralRelativeState, missile_curvature: float
) -> tuple[float, float]:
    """Right-hand sides (r'' - r q'^2, r q'' + 2 r' q') for a maneuvering
    target, given the commanded missile curvature.

    With the counterclockwise-positive curvature convention used throughout
    this package the missile terms enter as (+k_m sin(theta_m),
    -k_m cos(theta_m)); the target curvature terms carry the mirrored signs.
    Provided as a rate evaluator for reduction checks only, never integrated.
    """
    theta_m = state.polar.theta_m
    radial = (
        state.m_prime * math.cos(state.theta_t)
        - state.m * state.m * state.k_t * math.sin(state.theta_t)
        + missile_curvature * math.sin(theta_m)
    )
    transverse = (
        state.m_prime * math.sin(state.theta_t)
        + state.m * state.m * state.k_t * math.cos(state.theta_t)
        - missile_curvature * math.cos(theta_m)
    )
    return radial, transverse


def stationary_accels_from_polar(state: PolarState, missile_curvature: float) -> tuple[float, float]:
    """Stationary-target second-order rates expressed through the leading angle:
    (k_m sin(theta_m), -k_m cos(theta_m))."""
    return (
        missile_curvature * math.sin(state.theta_m),
        -missile_curvature * math.cos(state.theta_m),
    )


def stationary_accels_from_rates(
    r: float, r_prime: float, q_prime: float, missile_curvature: float
) -> tuple[float, float]:
    """Stationary-target second-order rates expressed through (r', q'):
    (-r q' k_m, r' k_m).  Identical to the leading-angle form once
    r' = -cos(theta_m) and r q' = -sin(theta_m) are substituted."""
    return -r * q_prime * missile_curvature, r_prime * missile_curvature


def speed_invariant_defect(r_prime: float, r: float, q_prime: float) -> float:
    """Runtime diagnostic r'^2 + (r q')^2 - 1; zero for any state produced by
    the stationary-target rate equations."""
    rq = r * q_prime
    return r_prime * r_prime + rq * rq - 1.0
