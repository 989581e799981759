"""Pure-Python integration kernels.

Functional twin of the compiled extension: same state layout, same RK4
stepping, same termination rules, so results agree to rounding.  Used as the
import-time fallback when the extension is unavailable (or when forced via
ARCPPN_PURE_PYTHON=1); an order of magnitude slower, which only matters for
long runs and capture sweeps.

Both kernels integrate until one of:

* deep hit: r below kill_radius/10 (the same radius guards the 1/r in the
  LOS rate, so dynamics past physical intercept are never evaluated);
* terminal projection: while closing inside max(1.5 kill, 2 step lengths)
  the remaining motion is straight to high accuracy, so the perpendicular
  miss r |sin theta| is known; stop as an intercept when it is inside the
  kill radius instead of integrating through the LOS flip of a flyby;
* node-level local minimum of r (a flyby wider than the kill radius):
  recorded with its neighbours for Python-side refinement, run continues;
* escape radius exceeded, speed exhausted, step budget exhausted, or a
  non-finite state.

Return layout (both kernels):
    (log, status, miss, t_star, s_star, min_t, min_s, min_r,
     bracket, max_demand, saturated)

log is a float64 array of logged nodes (initial node, every log_every-th
node, final node).  miss/t_star/s_star are refined values for intercepts and
copies of the best node minimum otherwise.  bracket is a (3, 3) array of
(t, s, r) rows around the best node minimum (NaN-filled if fewer than three
nodes exist).  max_demand is the largest unclamped command magnitude seen at
nodes (acceleration m/s^2 for the time kernel, curvature 1/m for the
arc-length kernel); saturated reports whether the clamp ever engaged.
"""

from __future__ import annotations

import math

import numpy as np

from . import codes

_NAN = float("nan")


def time_kernel(
    x0: float,
    y0: float,
    phi0: float,
    v0: float,
    target_x: float,
    target_y: float,
    nav_gain: float,
    drag: float,
    dt: float,
    kill_radius: float,
    max_steps: int,
    accel_limit: float,
    escape_radius: float,
    log_every: int,
):
    """Fixed-step RK4 PPN flight in the time domain.

    State (x, y, phi, v, s); log columns (t, s, x, y, phi, v).
    accel_limit / escape_radius <= 0 disable the clamp / divergence check.
    """
    sin = math.sin
    cos = math.cos
    atan2 = math.atan2
    hypot = math.hypot

    deep = 0.1 * kill_radius
    limit_on = accel_limit > 0.0

    x, y, phi, v = x0, y0, phi0, v0
    t = 0.0
    s = 0.0

    n_alloc = max_steps // log_every + 3
    log = np.empty((n_alloc, 6))
    n_logged = 0

    def rhs(x, y, phi, v):
        rx = target_x - x
        ry = target_y - y
        r = hypot(rx, ry)
        if r < deep:
            r = deep
        theta = phi - atan2(ry, rx)
        q_dot = -v * sin(theta) / r
        a = nav_gain * v * q_dot
        if limit_on:
            if a > accel_limit:
                a = accel_limit
            elif a < -accel_limit:
                a = -accel_limit
        return v * cos(phi), v * sin(phi), a / v, -drag, v

    status = codes.HORIZON
    miss = _NAN
    t_star = _NAN
    s_star = _NAN
    max_demand = 0.0
    saturated = False

    # previous two nodes (t, s, r) for local-minimum detection
    t_p = s_p = r_p = _NAN
    t_pp = s_pp = r_pp = _NAN
    min_t = min_s = min_r = _NAN
    bracket = np.full((3, 3), _NAN)

    step = 0
    while True:
        rx = target_x - x
        ry = target_y - y
        r = hypot(rx, ry)
        theta = phi - atan2(ry, rx)
        q_dot = -v * sin(theta) / (r if r > deep else deep)
        demand = abs(nav_gain * v * q_dot)
        if demand > max_demand:
            max_demand = demand
        if limit_on and demand > accel_limit:
            saturated = True

        if step % log_every == 0:
            log[n_logged] = (t, s, x, y, phi, v)
            n_logged += 1
            logged_this_node = True
        else:
            logged_this_node = False

        if math.isnan(min_r) or r < min_r:
            min_t, min_s, min_r = t, s, r

        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(phi) and math.isfinite(v)):
            status = codes.NUMERIC
            break
        if r < deep:
            status = codes.INTERCEPT
            miss, t_star, s_star = r, t, s
            break
        if v <= 0.0:
            status = codes.SPEED_EXHAUSTED
            break
        step_len = v * dt
        cos_theta = cos(theta)
        if r <= max(1.5 * kill_radius, 2.0 * step_len) and cos_theta > 0.0:
            perp = r * abs(sin(theta))
            if perp <= kill_radius:
                along = r * cos_theta
                status = codes.INTERCEPT
                miss = perp
                s_star = s + along
                t_star = t + along / v
                bracket[0] = (t_pp, s_pp, r_pp)
                bracket[1] = (t_p, s_p, r_p)
                bracket[2] = (t, s, r)
                break
        if step >= 2 and r_p <= r_pp and r_p < r and r_p <= min_r:
            bracket[0] = (t_pp, s_pp, r_pp)
            bracket[1] = (t_p, s_p, r_p)
            bracket[2] = (t, s, r)
        if escape_radius > 0.0 and r > escape_radius:
            status = codes.DIVERGED
            break
        if step >= max_steps:
            status = codes.HORIZON
            break

        t_pp, s_pp, r_pp = t_p, s_p, r_p
        t_p, s_p, r_p = t, s, r

        dx1, dy1, dphi1, dv1, ds1 = rhs(x, y, phi, v)
        h2 = 0.5 * dt
        dx2, dy2, dphi2, dv2, ds2 = rhs(x + h2 * dx1, y + h2 * dy1, phi + h2 * dphi1, v + h2 * dv1)
        dx3, dy3, dphi3, dv3, ds3 = rhs(x + h2 * dx2, y + h2 * dy2, phi + h2 * dphi2, v + h2 * dv2)
        dx4, dy4, dphi4, dv4, ds4 = rhs(x + dt * dx3, y + dt * dy3, phi + dt * dphi3, v + dt * dv3)
        sixth = dt / 6.0
        x += sixth * (dx1 + 2.0 * (dx2 + dx3) + dx4)
        y += sixth * (dy1 + 2.0 * (dy2 + dy3) + dy4)
        phi += sixth * (dphi1 + 2.0 * (dphi2 + dphi3) + dphi4)
        v += sixth * (dv1 + 2.0 * (dv2 + dv3) + dv4)
        s += sixth * (ds1 + 2.0 * (ds2 + ds3) + ds4)
        t += dt
        step += 1

    if not logged_this_node:
        log[n_logged] = (t, s, x, y, phi, v)
        n_logged += 1
    if status != codes.INTERCEPT:
        miss, t_star, s_star = min_r, min_t, min_s
    return (
        log[:n_logged],
        status,
        miss,
        t_star,
        s_star,
        min_t,
        min_s,
        min_r,
        bracket,
        max_demand,
        saturated,
    )


def arc_kernel(
    r0: float,
    theta0: float,
    q0: float,
    nav_gain: float,
    ds: float,
    kill_radius: float,
    max_steps: int,
    curvature_limit: float,
    escape_radius: float,
    log_every: int,
):
    """Fixed-step RK4 PPN flight in the arc-length domain.

    State (r, theta_m, q); log columns (s, r, theta, q).  The commanded
    curvature N q' is clamped to +-curvature_limit when positive; the
    leading-angle rate is then k_cmd - q', which reduces to (1-N) sin/r
    when unclamped.
    """
    sin = math.sin
    cos = math.cos

    deep = 0.1 * kill_radius
    limit_on = curvature_limit > 0.0

    r, theta, q = r0, theta0, q0
    s = 0.0

    n_alloc = max_steps // log_every + 3
    log = np.empty((n_alloc, 4))
    n_logged = 0

    def rhs(r, theta):
        reff = r if r > deep else deep
        q_prime = -sin(theta) / reff
        k = nav_gain * q_prime
        if limit_on:
            if k > curvature_limit:
                k = curvature_limit
            elif k < -curvature_limit:
                k = -curvature_limit
        return -cos(theta), k - q_prime, q_prime

    status = codes.HORIZON
    miss = _NAN
    s_star = _NAN
    max_demand = 0.0
    saturated = False

    s_p = r_p = _NAN
    s_pp = r_pp = _NAN
    min_s = min_r = _NAN
    bracket = np.full((3, 3), _NAN)

    step = 0
    while True:
        q_prime = -sin(theta) / (r if r > deep else deep)
        demand = abs(nav_gain * q_prime)
        if demand > max_demand:
            max_demand = demand
        if limit_on and demand > curvature_limit:
            saturated = True

        if step % log_every == 0:
            log[n_logged] = (s, r, theta, q)
            n_logged += 1
            logged_this_node = True
        else:
            logged_this_node = False

        if math.isnan(min_r) or r < min_r:
            min_s, min_r = s, r

        if not (math.isfinite(r) and math.isfinite(theta) and math.isfinite(q)):
            status = codes.NUMERIC
            break
        if r < deep:
            status = codes.INTERCEPT
            miss, s_star = r, s
            break
        cos_theta = cos(theta)
        if r <= max(1.5 * kill_radius, 2.0 * ds) and cos_theta > 0.0:
            perp = r * abs(sin(theta))
            if perp <= kill_radius:
                status = codes.INTERCEPT
                miss = perp
                s_star = s + r * cos_theta
                bracket[0] = (_NAN, s_pp, r_pp)
                bracket[1] = (_NAN, s_p, r_p)
                bracket[2] = (_NAN, s, r)
                break
        if step >= 2 and r_p <= r_pp and r_p < r and r_p <= min_r:
            bracket[0] = (_NAN, s_pp, r_pp)
            bracket[1] = (_NAN, s_p, r_p)
            bracket[2] = (_NAN, s, r)
        if escape_radius > 0.0 and r > escape_radius:
            status = codes.DIVERGED
            break
        if step >= max_steps:
            status = codes.HORIZON
            break

        s_pp, r_pp = s_p, r_p
        s_p, r_p = s, r

        dr1, dth1, dq1 = rhs(r, theta)
        h2 = 0.5 * ds
        dr2, dth2, dq2 = rhs(r + h2 * dr1, theta + h2 * dth1)
        dr3, dth3, dq3 = rhs(r + h2 * dr2, theta + h2 * dth2)
        dr4, dth4, dq4 = rhs(r + ds * dr3, theta + ds * dth3)
        sixth = ds / 6.0
        r += sixth * (dr1 + 2.0 * (dr2 + dr3) + dr4)
        theta += sixth * (dth1 + 2.0 * (dth2 + dth3) + dth4)
        q += sixth * (dq1 + 2.0 * (dq2 + dq3) + dq4)
        s += ds
        step += 1

    if not logged_this_node:
        log[n_logged] = (s, r, theta, q)
        n_logged += 1
    if status != codes.INTERCEPT:
        miss, s_star = min_r, min_s
    return (
        log[:n_logged],
        status,
        miss,
        _NAN,
        s_star,
        _NAN,
        min_s,
        min_r,
        bracket,
        max_demand,
        saturated,
    )
