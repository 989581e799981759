"""Closed-form PPN engagement profiles and performance metrics.

All results here are exact functions of the initial conditions
(r0, theta_m0, q0, N) alone; missile speed and its time variation never
enter.  Profile relations in terms of the relative distance r:

    q'(r)      = q0' (r/r0)^(N-2)
    r'(r)^2    = 1 - sin^2(theta_m0) (r/r0)^(2(N-1))
    sin(theta) = sin(theta_m0) (r/r0)^(N-1)
    k_m(r)     = N q0' (r/r0)^(N-2)

For |theta_m0| > 90 deg the engagement first opens out to a turning point
r_max and then closes, so r alone is ambiguous between the two branches;
the branch argument resolves it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import quadrature
from .errors import DomainError, InsufficientEnergyError
from .kinematics import GuidanceParams, SpeedProfile, wrap_angle

Branch = Literal["auto", "inbound", "outbound"]

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class ClosedFormInputs:
    """Initial conditions driving every analytic relation."""

    r0: float
    theta_m0: float
    q0: float
    gain: GuidanceParams

    def __post_init__(self):
        if not self.r0 > 0.0:
            raise ValueError(f"initial distance must be positive, got {self.r0}")
        if not abs(self.theta_m0) <= math.pi:
            raise ValueError(f"leading angle must lie in [-pi, pi], got {self.theta_m0}")

    @property
    def n(self) -> float:
        return self.gain.gain

    @property
    def q_prime0(self) -> float:
        """Initial arc-length LOS rate, -sin(theta_m0)/r0 (rad/m)."""
        return -math.sin(self.theta_m0) / self.r0


@dataclass(frozen=True)
class ProfilePoint:
    """One radius sample of the closed-form engagement profile."""

    r: float
    q_prime: float
    r_prime: float
    theta_m: float
    k_m: float


def _check_radius(inputs: ClosedFormInputs, r: float) -> None:
    r_max = max_relative_distance(inputs)
    if not 0.0 < r <= r_max * (1.0 + 1e-12):
        raise DomainError(f"radius {r} outside reachable range (0, {r_max}]")


def _resolve_branch(inputs: ClosedFormInputs, r: float, branch: Branch) -> str:
    if branch not in ("auto", "inbound", "outbound"):
        raise ValueError(f"unknown branch {branch!r}")
    if abs(inputs.theta_m0) <= _HALF_PI:
        if branch == "outbound":
            raise DomainError("no outbound branch when |theta_m0| <= 90 deg")
        return "inbound"
    if branch != "auto":
        return branch
    # outbound covers r in [r0, r_max]; below r0 only the inbound branch exists
    return "outbound" if r >= inputs.r0 * (1.0 - 1e-12) else "inbound"


def los_rate_at(inputs: ClosedFormInputs, r: float) -> float:
    """LOS rate q'(r) in rad/m; single-valued in r (both branches share it)."""
    _check_radius(inputs, r)
    return inputs.q_prime0 * (r / inputs.r0) ** (inputs.n - 2.0)


def closing_speed_at(inputs: ClosedFormInputs, r: float, branch: Branch = "auto") -> float:
    """Dimensionless closing rate r'(r): negative inbound, positive outbound."""
    _check_radius(inputs, r)
    side = _resolve_branch(inputs, r, branch)
    sin0 = math.sin(inputs.theta_m0)
    mag_sq = 1.0 - sin0 * sin0 * (r / inputs.r0) ** (2.0 * (inputs.n - 1.0))
    mag = math.sqrt(max(mag_sq, 0.0))
    return mag if side == "outbound" else -mag


def leading_angle_at(inputs: ClosedFormInputs, r: float, branch: Branch = "auto") -> float:
    """Leading angle theta_m(r); |theta_m| > 90 deg outbound, <= 90 deg inbound."""
    _check_radius(inputs, r)
    side = _resolve_branch(inputs, r, branch)
    sine = math.sin(inputs.theta_m0) * (r / inputs.r0) ** (inputs.n - 1.0)
    principal = math.asin(min(1.0, max(-1.0, sine)))
    if side == "outbound":
        return math.copysign(math.pi - abs(principal), inputs.theta_m0)
    return principal


def radius_at_leading_angle(inputs: ClosedFormInputs, theta_m: float) -> float:
    """Inverse of the leading-angle profile, r = r0 (sin(theta_m)/sin(theta_m0))^(1/(N-1)).

    sin(theta_m) must carry the sign of sin(theta_m0); theta_m = 0 maps to
    the intercept point r = 0.
    """
    sin0 = math.sin(inputs.theta_m0)
    sin_m = math.sin(theta_m)
    if sin0 == 0.0:
        raise DomainError("radius inverse undefined for theta_m0 in {0, pi}")
    if sin_m == 0.0:
        return 0.0
    if math.copysign(1.0, sin_m) != math.copysign(1.0, sin0):
        raise DomainError(f"sin({theta_m}) must share the sign of sin(theta_m0)")
    return inputs.r0 * (sin_m / sin0) ** (1.0 / (inputs.n - 1.0))


def curvature_at(inputs: ClosedFormInputs, r: float) -> float:
    """Commanded curvature k_m(r) = N q'(r) in 1/m; single-valued in r."""
    return inputs.n * los_rate_at(inputs, r)


def max_relative_distance(inputs: ClosedFormInputs) -> float:
    """Largest missile-target distance over the engagement.

    Equals r0 for |theta_m0| < 90 deg; otherwise the turning-point radius
    r0 sin(|theta_m0|)^(-1/(N-1)).  Diverges for |theta_m0| = 180 deg, where
    the missile initially flies straight down the LOS away from the target.
    """
    abs_theta = abs(inputs.theta_m0)
    if abs_theta < _HALF_PI:
        return inputs.r0
    if abs_theta >= math.pi:
        raise DomainError("turning point diverges for |theta_m0| = 180 deg")
    return inputs.r0 * math.sin(abs_theta) ** (-1.0 / (inputs.n - 1.0))


def max_curvature(inputs: ClosedFormInputs, cutoff_radius: float | None = None) -> float:
    """Peak commanded curvature magnitude (1/m), defined for N > 2.

    For N > 2 the command peaks at the turning point (or at launch when
    |theta_m0| < 90 deg) and decays toward intercept.  For 1 < N <= 2 the
    command never decays (it is constant for N = 2 and grows without bound
    for N < 2), so callers must supply a cutoff radius and get the command
    magnitude evaluated there instead.
    """
    if inputs.n <= 2.0:
        if cutoff_radius is None:
            raise DomainError(
                "curvature command does not peak for N <= 2; pass cutoff_radius "
                "to evaluate the command at a finite radius"
            )
        _check_radius(inputs, cutoff_radius)
        return abs(curvature_at(inputs, cutoff_radius))
    abs_theta = abs(inputs.theta_m0)
    sin0 = math.sin(abs_theta)
    if abs_theta >= _HALF_PI:
        return inputs.n / inputs.r0 * sin0 ** (1.0 / (inputs.n - 1.0))
    return inputs.n / inputs.r0 * sin0


def curvature_increment(inputs: ClosedFormInputs) -> float:
    """Total turn angle over the engagement, N |theta_m0| / (N - 1) (rad)."""
    return inputs.n * abs(inputs.theta_m0) / (inputs.n - 1.0)


def flight_path_length(inputs: ClosedFormInputs, rel_tol: float = 1e-10) -> float:
    """Total arc length flown to intercept (m).

    The underlying integral is
        r0 / ((N-1) sin(|theta_m0|)^(1/(N-1)))
            * integral_0^|theta_m0| sin(t)^(-(N-2)/(N-1)) dt,
    whose integrand blows up at t = 0 like t^(-(N-2)/(N-1)) for N > 2.
    Substituting t = u^(N-1) turns it into the bounded, analytic
        (N-1) * (u^(N-1)/sin(u^(N-1)))^((N-2)/(N-1)),
    which the adaptive panel integrator handles at full accuracy.
    N = 2 has the exact value r0 |theta_m0| / sin(|theta_m0|).
    """
    n = inputs.n
    abs_theta = abs(inputs.theta_m0)
    if abs_theta == 0.0:
        return inputs.r0
    if not abs_theta < math.pi:
        raise DomainError("flight path diverges for |theta_m0| = 180 deg")
    sin0 = math.sin(abs_theta)
    if n == 2.0:
        return inputs.r0 * abs_theta / sin0
    p = (n - 2.0) / (n - 1.0)

    def regularized(u: float) -> float:
        t = u ** (n - 1.0)
        if t == 0.0:
            return n - 1.0
        return (n - 1.0) * (t / math.sin(t)) ** p

    integral, _ = quadrature.integrate(
        regularized, 0.0, abs_theta ** (1.0 / (n - 1.0)), rel_tol=rel_tol
    )
    return inputs.r0 / ((n - 1.0) * sin0 ** (1.0 / (n - 1.0))) * integral


def terminal_impact_angle(inputs: ClosedFormInputs) -> float:
    """Terminal LOS / flight-path angle q_f = q0 - theta_m0/(N-1), wrapped.

    The leading angle converges to zero at intercept, so the flight-path
    angle meets the LOS there.
    """
    if not abs(inputs.theta_m0) < math.pi:
        raise DomainError("no intercept for |theta_m0| = 180 deg")
    return wrap_angle(inputs.q0 - inputs.theta_m0 / (inputs.n - 1.0))


def flight_time_under_constant_drag(path_length: float, profile: SpeedProfile) -> float:
    """Clock time to cover a path length under v(t) = v0 - a_d t (s).

    Smallest positive root of v0 t - a_d t^2 / 2 = path_length; raises
    InsufficientEnergyError when the distance exceeds the coast range.
    """
    if path_length < 0.0:
        raise ValueError(f"path length must be non-negative, got {path_length}")
    if path_length == 0.0:
        return 0.0
    if profile.drag_decel == 0.0:
        return path_length / profile.v0
    disc = profile.v0 * profile.v0 - 2.0 * profile.drag_decel * path_length
    if disc < 0.0:
        raise InsufficientEnergyError(
            f"path {path_length} m exceeds coast range {profile.coast_range()} m"
        )
    return (profile.v0 - math.sqrt(disc)) / profile.drag_decel


def profile(inputs: ClosedFormInputs, samples: int = 200) -> list[ProfilePoint]:
    """Engagement profile sampled uniformly in leading angle from launch to
    intercept; single-valued because theta_m decreases monotonically in
    arc length."""
    if samples < 2:
        raise ValueError("need at least two samples")
    if inputs.theta_m0 == 0.0:
        # head-on: the leading angle never moves, sweep the radius instead
        return [
            ProfilePoint(
                r=inputs.r0 * (1.0 - i / (samples - 1.0)),
                q_prime=0.0,
                r_prime=-1.0,
                theta_m=0.0,
                k_m=0.0,
            )
            for i in range(samples)
        ]
    points = []
    for i in range(samples):
        theta = inputs.theta_m0 * (1.0 - i / (samples - 1.0))
        if theta == inputs.theta_m0:
            r = inputs.r0
        elif theta == 0.0:
            r = 0.0
        else:
            r = radius_at_leading_angle(inputs, theta)
        if r > 0.0:
            q_prime = -math.sin(theta) / r
        elif inputs.n > 2.0:
            q_prime = 0.0
        elif inputs.n == 2.0:
            q_prime = inputs.q_prime0
        else:
            q_prime = math.copysign(math.inf, inputs.q_prime0)
        points.append(
            ProfilePoint(
                r=r,
                q_prime=q_prime,
                r_prime=-math.cos(theta),
                theta_m=theta,
                k_m=inputs.n * q_prime,
            )
        )
    return points
