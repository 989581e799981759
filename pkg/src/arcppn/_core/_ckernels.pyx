# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integration kernels; see pykernels for the contract.

Line-for-line translation of the pure-Python kernels into C doubles so both
backends produce matching trajectories.  The stepping loops run without the
GIL, so batch runs scale across threads.
"""

import numpy as np

from libc.math cimport atan2, cos, fabs, hypot, isfinite, isnan, sin, NAN

from . import codes

cdef int _INTERCEPT = codes.INTERCEPT
cdef int _HORIZON = codes.HORIZON
cdef int _DIVERGED = codes.DIVERGED
cdef int _SPEED_EXHAUSTED = codes.SPEED_EXHAUSTED
cdef int _NUMERIC = codes.NUMERIC


cdef inline double _accel(double x, double y, double v, double phi,
                          double target_x, double target_y, double nav_gain,
                          double deep, bint limit_on, double accel_limit) nogil:
    cdef double rx = target_x - x
    cdef double ry = target_y - y
    cdef double r = hypot(rx, ry)
    cdef double a
    if r < deep:
        r = deep
    a = nav_gain * v * (-v * sin(phi - atan2(ry, rx)) / r)
    if limit_on:
        if a > accel_limit:
            a = accel_limit
        elif a < -accel_limit:
            a = -accel_limit
    return a


def time_kernel(
    double x0,
    double y0,
    double phi0,
    double v0,
    double target_x,
    double target_y,
    double nav_gain,
    double drag,
    double dt,
    double kill_radius,
    long max_steps,
    double accel_limit,
    double escape_radius,
    long log_every,
):
    cdef double deep = 0.1 * kill_radius
    cdef bint limit_on = accel_limit > 0.0

    cdef double x = x0, y = y0, phi = phi0, v = v0
    cdef double t = 0.0, s = 0.0

    cdef long n_alloc = max_steps // log_every + 3
    log_arr = np.empty((n_alloc, 6))
    cdef double[:, ::1] log = log_arr
    cdef long n_logged = 0

    cdef int status = _HORIZON
    cdef double miss = NAN, t_star = NAN, s_star = NAN
    cdef double max_demand = 0.0
    cdef bint saturated = False

    cdef double t_p = NAN, s_p = NAN, r_p = NAN
    cdef double t_pp = NAN, s_pp = NAN, r_pp = NAN
    cdef double min_t = NAN, min_s = NAN, min_r = NAN
    cdef double[9] brk
    cdef int i
    for i in range(9):
        brk[i] = NAN

    cdef long step = 0
    cdef bint logged_this_node = False
    cdef double rx, ry, r, theta, q_dot, demand, window, cos_theta, perp, along
    cdef double a, h2, sixth
    cdef double dx1, dy1, dphi1, dv1, ds1, dx2, dy2, dphi2, dv2, ds2
    cdef double dx3, dy3, dphi3, dv3, ds3, dx4, dy4, dphi4, dv4, ds4
    cdef double xs, ys, phis, vs

    with nogil:
        while True:
            rx = target_x - x
            ry = target_y - y
            r = hypot(rx, ry)
            theta = phi - atan2(ry, rx)
            q_dot = -v * sin(theta) / (r if r > deep else deep)
            demand = fabs(nav_gain * v * q_dot)
            if demand > max_demand:
                max_demand = demand
            if limit_on and demand > accel_limit:
                saturated = True

            if step % log_every == 0:
                log[n_logged, 0] = t
                log[n_logged, 1] = s
                log[n_logged, 2] = x
                log[n_logged, 3] = y
                log[n_logged, 4] = phi
                log[n_logged, 5] = v
                n_logged += 1
                logged_this_node = True
            else:
                logged_this_node = False

            if isnan(min_r) or r < min_r:
                min_t = t
                min_s = s
                min_r = r

            if not (isfinite(x) and isfinite(y) and isfinite(phi) and isfinite(v)):
                status = _NUMERIC
                break
            if r < deep:
                status = _INTERCEPT
                miss = r
                t_star = t
                s_star = s
                break
            if v <= 0.0:
                status = _SPEED_EXHAUSTED
                break
            window = 1.5 * kill_radius
            if 2.0 * v * dt > window:
                window = 2.0 * v * dt
            cos_theta = cos(theta)
            if r <= window and cos_theta > 0.0:
                perp = r * fabs(sin(theta))
                if perp <= kill_radius:
                    along = r * cos_theta
                    status = _INTERCEPT
                    miss = perp
                    s_star = s + along
                    t_star = t + along / v
                    brk[0] = t_pp; brk[1] = s_pp; brk[2] = r_pp
                    brk[3] = t_p; brk[4] = s_p; brk[5] = r_p
                    brk[6] = t; brk[7] = s; brk[8] = r
                    break
            if step >= 2 and r_p <= r_pp and r_p < r and r_p <= min_r:
                brk[0] = t_pp; brk[1] = s_pp; brk[2] = r_pp
                brk[3] = t_p; brk[4] = s_p; brk[5] = r_p
                brk[6] = t; brk[7] = s; brk[8] = r
            if escape_radius > 0.0 and r > escape_radius:
                status = _DIVERGED
                break
            if step >= max_steps:
                status = _HORIZON
                break

            t_pp = t_p; s_pp = s_p; r_pp = r_p
            t_p = t; s_p = s; r_p = r

            a = _accel(x, y, v, phi, target_x, target_y, nav_gain, deep, limit_on, accel_limit)
            dx1 = v * cos(phi); dy1 = v * sin(phi); dphi1 = a / v; dv1 = -drag; ds1 = v

            h2 = 0.5 * dt
            xs = x + h2 * dx1; ys = y + h2 * dy1; phis = phi + h2 * dphi1; vs = v + h2 * dv1
            a = _accel(xs, ys, vs, phis, target_x, target_y, nav_gain, deep, limit_on, accel_limit)
            dx2 = vs * cos(phis); dy2 = vs * sin(phis); dphi2 = a / vs; dv2 = -drag; ds2 = vs

            xs = x + h2 * dx2; ys = y + h2 * dy2; phis = phi + h2 * dphi2; vs = v + h2 * dv2
            a = _accel(xs, ys, vs, phis, target_x, target_y, nav_gain, deep, limit_on, accel_limit)
            dx3 = vs * cos(phis); dy3 = vs * sin(phis); dphi3 = a / vs; dv3 = -drag; ds3 = vs

            xs = x + dt * dx3; ys = y + dt * dy3; phis = phi + dt * dphi3; vs = v + dt * dv3
            a = _accel(xs, ys, vs, phis, target_x, target_y, nav_gain, deep, limit_on, accel_limit)
            dx4 = vs * cos(phis); dy4 = vs * sin(phis); dphi4 = a / vs; dv4 = -drag; ds4 = vs

            sixth = dt / 6.0
            x += sixth * (dx1 + 2.0 * (dx2 + dx3) + dx4)
            y += sixth * (dy1 + 2.0 * (dy2 + dy3) + dy4)
            phi += sixth * (dphi1 + 2.0 * (dphi2 + dphi3) + dphi4)
            v += sixth * (dv1 + 2.0 * (dv2 + dv3) + dv4)
            s += sixth * (ds1 + 2.0 * (ds2 + ds3) + ds4)
            t += dt
            step += 1

    if not logged_this_node:
        log[n_logged, 0] = t
        log[n_logged, 1] = s
        log[n_logged, 2] = x
        log[n_logged, 3] = y
        log[n_logged, 4] = phi
        log[n_logged, 5] = v
        n_logged += 1
    if status != _INTERCEPT:
        miss = min_r
        t_star = min_t
        s_star = min_s
    bracket = np.array(
        [[brk[0], brk[1], brk[2]], [brk[3], brk[4], brk[5]], [brk[6], brk[7], brk[8]]]
    )
    return (
        log_arr[:n_logged],
        status,
        miss,
        t_star,
        s_star,
        min_t,
        min_s,
        min_r,
        bracket,
        max_demand,
        bool(saturated),
    )


cdef inline double _curv(double r, double theta, double nav_gain, double deep,
                         bint limit_on, double curvature_limit) nogil:
    cdef double reff = r if r > deep else deep
    cdef double k = nav_gain * (-sin(theta) / reff)
    if limit_on:
        if k > curvature_limit:
            k = curvature_limit
        elif k < -curvature_limit:
            k = -curvature_limit
    return k


def arc_kernel(
    double r0,
    double theta0,
    double q0,
    double nav_gain,
    double ds,
    double kill_radius,
    long max_steps,
    double curvature_limit,
    double escape_radius,
    long log_every,
):
    cdef double deep = 0.1 * kill_radius
    cdef bint limit_on = curvature_limit > 0.0

    cdef double r = r0, theta = theta0, q = q0
    cdef double s = 0.0

    cdef long n_alloc = max_steps // log_every + 3
    log_arr = np.empty((n_alloc, 4))
    cdef double[:, ::1] log = log_arr
    cdef long n_logged = 0

    cdef int status = _HORIZON
    cdef double miss = NAN, s_star = NAN
    cdef double max_demand = 0.0
    cdef bint saturated = False

    cdef double s_p = NAN, r_p = NAN
    cdef double s_pp = NAN, r_pp = NAN
    cdef double min_s = NAN, min_r = NAN
    cdef double[9] brk
    cdef int i
    for i in range(9):
        brk[i] = NAN

    cdef long step = 0
    cdef bint logged_this_node = False
    cdef double q_prime, demand, window, cos_theta, perp
    cdef double k, h2, sixth, reff
    cdef double dr1, dth1, dq1, dr2, dth2, dq2, dr3, dth3, dq3, dr4, dth4, dq4
    cdef double rs, ths

    with nogil:
        while True:
            q_prime = -sin(theta) / (r if r > deep else deep)
            demand = fabs(nav_gain * q_prime)
            if demand > max_demand:
                max_demand = demand
            if limit_on and demand > curvature_limit:
                saturated = True

            if step % log_every == 0:
                log[n_logged, 0] = s
                log[n_logged, 1] = r
                log[n_logged, 2] = theta
                log[n_logged, 3] = q
                n_logged += 1
                logged_this_node = True
            else:
                logged_this_node = False

            if isnan(min_r) or r < min_r:
                min_s = s
                min_r = r

            if not (isfinite(r) and isfinite(theta) and isfinite(q)):
                status = _NUMERIC
                break
            if r < deep:
                status = _INTERCEPT
                miss = r
                s_star = s
                break
            window = 1.5 * kill_radius
            if 2.0 * ds > window:
                window = 2.0 * ds
            cos_theta = cos(theta)
            if r <= window and cos_theta > 0.0:
                perp = r * fabs(sin(theta))
                if perp <= kill_radius:
                    status = _INTERCEPT
                    miss = perp
                    s_star = s + r * cos_theta
                    brk[0] = NAN; brk[1] = s_pp; brk[2] = r_pp
                    brk[3] = NAN; brk[4] = s_p; brk[5] = r_p
                    brk[6] = NAN; brk[7] = s; brk[8] = r
                    break
            if step >= 2 and r_p <= r_pp and r_p < r and r_p <= min_r:
                brk[0] = NAN; brk[1] = s_pp; brk[2] = r_pp
                brk[3] = NAN; brk[4] = s_p; brk[5] = r_p
                brk[6] = NAN; brk[7] = s; brk[8] = r
            if escape_radius > 0.0 and r > escape_radius:
                status = _DIVERGED
                break
            if step >= max_steps:
                status = _HORIZON
                break

            s_pp = s_p; r_pp = r_p
            s_p = s; r_p = r

            reff = r if r > deep else deep
            q_prime = -sin(theta) / reff
            k = _curv(r, theta, nav_gain, deep, limit_on, curvature_limit)
            dr1 = -cos(theta); dth1 = k - q_prime; dq1 = q_prime

            h2 = 0.5 * ds
            rs = r + h2 * dr1; ths = theta + h2 * dth1
            reff = rs if rs > deep else deep
            q_prime = -sin(ths) / reff
            k = _curv(rs, ths, nav_gain, deep, limit_on, curvature_limit)
            dr2 = -cos(ths); dth2 = k - q_prime; dq2 = q_prime

            rs = r + h2 * dr2; ths = theta + h2 * dth2
            reff = rs if rs > deep else deep
            q_prime = -sin(ths) / reff
            k = _curv(rs, ths, nav_gain, deep, limit_on, curvature_limit)
            dr3 = -cos(ths); dth3 = k - q_prime; dq3 = q_prime

            rs = r + ds * dr3; ths = theta + ds * dth3
            reff = rs if rs > deep else deep
            q_prime = -sin(ths) / reff
            k = _curv(rs, ths, nav_gain, deep, limit_on, curvature_limit)
            dr4 = -cos(ths); dth4 = k - q_prime; dq4 = q_prime

            sixth = ds / 6.0
            r += sixth * (dr1 + 2.0 * (dr2 + dr3) + dr4)
            theta += sixth * (dth1 + 2.0 * (dth2 + dth3) + dth4)
            q += sixth * (dq1 + 2.0 * (dq2 + dq3) + dq4)
            s += ds
            step += 1

    if not logged_this_node:
        log[n_logged, 0] = s
        log[n_logged, 1] = r
        log[n_logged, 2] = theta
        log[n_logged, 3] = q
        n_logged += 1
    if status != _INTERCEPT:
        miss = min_r
        s_star = min_s
    bracket = np.array(
        [[brk[0], brk[1], brk[2]], [brk[3], brk[4], brk[5]], [brk[6], brk[7], brk[8]]]
    )
    return (
        log_arr[:n_logged],
        status,
        miss,
        NAN,
        s_star,
        NAN,
        min_s,
        min_r,
        bracket,
        max_demand,
        bool(saturated),
    )
