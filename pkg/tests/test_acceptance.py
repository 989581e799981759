"""Acceptance gate: one test per criterion, each printing a PASS line with
its measured margins.  Tolerances are fixed here, not calibrated elsewhere.
"""

import math
import time

import numpy as np
import pytest

from arcppn import (
    ClosedFormInputs,
    GuidanceParams,
    ManeuverLimit,
    TerminationReason,
    capture_region_analytic,
    capture_region_empirical,
    curvature_increment,
    flight_path_length,
    max_relative_distance,
    terminal_impact_angle,
    wrap_angle,
)
from arcppn import reference_data as ref
from arcppn.verification import build_verification_report

from conftest import ALL_CASES, Q0_DEG, R0, V0, make_config


def report(criterion: int, detail: str) -> None:
    print(f"\nACCEPTANCE {criterion} PASS: {detail}")


def case_inputs(gain, theta0_deg):
    return ClosedFormInputs(
        R0, math.radians(theta0_deg), math.radians(Q0_DEG), GuidanceParams(gain)
    )


def test_criterion_01_leading_angle_table_analytic():
    start = time.perf_counter()
    worst_rel, worst_path = 0.0, 0.0
    for case in ref.LEADING_ANGLE_SWEEP:
        inputs = case_inputs(case.gain, case.theta0_deg)
        rel_incr = abs(curvature_increment(inputs) - case.increment_analytic) / case.increment_analytic
        rel_maxr = abs(max_relative_distance(inputs) - case.max_r_analytic) / case.max_r_analytic
        path_err = abs(flight_path_length(inputs) - case.path_numerical)
        assert rel_incr <= 5e-6, case.label
        assert rel_maxr <= 5e-6, case.label
        assert path_err <= 0.05, case.label
        worst_rel = max(worst_rel, rel_incr, rel_maxr)
        worst_path = max(worst_path, path_err)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(1, f"6 leading-angle cases, worst rel {worst_rel:.1e}, "
              f"worst path err {worst_path:.3f} m, {elapsed:.2f} s")


def test_criterion_02_gain_table_analytic():
    start = time.perf_counter()
    worst_rel, worst_path = 0.0, 0.0
    for case in ref.GAIN_SWEEP:
        inputs = case_inputs(case.gain, case.theta0_deg)
        rel_incr = abs(curvature_increment(inputs) - case.increment_analytic) / case.increment_analytic
        rel_maxr = abs(max_relative_distance(inputs) - case.max_r_analytic) / case.max_r_analytic
        path = flight_path_length(inputs)
        path_err = abs(path - case.path_numerical)
        assert rel_incr <= 5e-6, case.label
        assert rel_maxr <= 5e-6, case.label
        assert path_err <= 0.05, case.label
        if case.gain == 2.0:
            theta0 = math.radians(case.theta0_deg)
            assert path == R0 * theta0 / math.sin(theta0)  # exact expression, no quadrature
        worst_rel = max(worst_rel, rel_incr, rel_maxr)
        worst_path = max(worst_path, path_err)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report(2, f"5 gain cases, worst rel {worst_rel:.1e}, "
              f"worst path err {worst_path:.3f} m, {elapsed:.2f} s")


def test_criterion_03_simulation_reproduces_tables():
    start = time.perf_counter()
    result = build_verification_report(include_simulation=True, time_step=1e-3, workers=4)
    elapsed = time.perf_counter() - start
    sim_cells = [c for c in result.cells if c.route == "simulation"]
    assert len(sim_cells) == 33
    failures = [c for c in sim_cells if not c.passed]
    assert not failures, [f"{c.case}/{c.quantity}: {c.abs_error}" for c in failures]
    assert elapsed < 30.0
    worst = {"flight_path": 0.0, "curvature_increment": 0.0, "max_r": 0.0}
    for c in sim_cells:
        worst[c.quantity] = max(worst[c.quantity], c.abs_error)
    report(3, f"33 simulation cells within (1 m, 1e-4, 0.5 m); worst "
              f"({worst['flight_path']:.3f} m, {worst['curvature_increment']:.1e}, "
              f"{worst['max_r']:.3f} m); {elapsed:.1f} s")


def test_criterion_04_speed_invariance(scenario_runs):
    runs = {drag: scenario_runs(3.0, 120.0, "time", drag=drag) for drag in (0.0, 0.1, 1.0)}
    paths = {d: m.flight_path for d, (_, m) in runs.items()}
    incrs = {d: m.curvature_increment for d, (_, m) in runs.items()}
    maxrs = {d: m.max_r for d, (_, m) in runs.items()}
    assert max(paths.values()) - min(paths.values()) < 0.1
    assert max(incrs.values()) - min(incrs.values()) < 1e-6
    assert max(maxrs.values()) - min(maxrs.values()) < 0.01
    s_end = min(float(traj.s_m[-1]) for traj, _ in runs.values())
    s_grid = np.linspace(0.0, s_end, 400)
    coords = {d: traj.positions_at(s_grid) for d, (traj, _) in runs.items()}
    worst = 0.0
    for a in (0.0, 0.1):
        xa, ya = coords[a]
        xb, yb = coords[1.0]
        worst = max(worst, float(np.max(np.hypot(xa - xb, ya - yb))))
    assert worst < 0.1
    report(4, f"path geometry invariant under drag {{0, 0.1, 1.0}}: worst pointwise "
              f"{worst * 1000:.3f} mm, path spread {max(paths.values()) - min(paths.values()):.2e} m")


def test_criterion_05_speed_invariant_identity(scenario_runs):
    worst = 0.0
    for gain, theta in ALL_CASES:
        traj, _ = scenario_runs(gain, theta, "arc")
        defect = np.cos(traj.theta_m) ** 2 + (traj.r * traj.q_prime) ** 2 - 1.0
        worst = max(worst, float(np.max(np.abs(defect))))
    assert worst < 1e-9
    report(5, f"r'^2 + (r q')^2 - 1 over all arc-length runs: worst {worst:.1e}")


def test_criterion_06_domain_equivalence(scenario_runs):
    worst = 0.0
    for gain, theta in ALL_CASES:
        traj_t, m_t = scenario_runs(gain, theta, "time")
        traj_a, m_a = scenario_runs(gain, theta, "arc")
        s_grid = np.linspace(0.0, min(float(traj_t.s_m[-1]), float(traj_a.s_m[-1])), 400)
        xt, yt = traj_t.positions_at(s_grid)
        xa, ya = traj_a.positions_at(s_grid)
        gap = float(np.max(np.hypot(xt - xa, yt - ya)))
        assert gap < 0.1, (gain, theta)
        worst = max(worst, gap)
    report(6, f"time vs arc-length geometry across 11 cases: worst {worst * 1000:.3f} mm")


def test_criterion_07_los_rate_regimes(scenario_runs):
    # N = 2: constant LOS rate in arc length.  The arc-length log holds the
    # constancy at every sample; the time-domain log is checked outside the
    # terminal discretization boundary layer (r below ~20 step lengths, the
    # last ~10 m of a 48 km flight), where any fixed-step integrator of the
    # 1/r endgame departs from the continuum identity.
    traj_a, _ = scenario_runs(2.0, 120.0, "arc")
    q_prime_a = np.abs(traj_a.q_prime)
    spread_arc = float((q_prime_a.max() - q_prime_a.min()) / q_prime_a[0])
    assert spread_arc < 1e-6

    traj, _ = scenario_runs(2.0, 120.0, "time")
    q_prime = np.abs(traj.q_prime)
    boundary_layer = 20.0 * V0 * 1e-3  # 20 time steps of path
    mask = traj.r >= boundary_layer
    spread = float((q_prime[mask].max() - q_prime[mask].min()) / q_prime[0])
    assert spread < 1e-6

    # N = 3, theta0 = 120 deg: single interior maximum
    traj, _ = scenario_runs(3.0, 120.0, "time")
    q_prime = np.abs(traj.q_prime)
    i_max = int(np.argmax(q_prime))
    assert 0 < i_max < len(q_prime) - 1
    tiny = 1e-9 * float(q_prime.max())
    diffs = np.diff(q_prime)
    assert np.all(diffs[: max(i_max - 1, 0)] > -tiny)
    assert np.all(diffs[i_max + 1 :] < tiny)

    # N = 3, theta0 = 60 deg: monotone decay
    traj, _ = scenario_runs(3.0, 60.0, "time")
    q_prime = np.abs(traj.q_prime)
    assert np.all(np.diff(q_prime) < 1e-9 * float(q_prime[0]))
    report(7, f"N=2 LOS-rate spread {spread_arc:.1e} (arc log), {spread:.1e} "
              f"(time log, r over 20 steps); N=3/120 single interior peak at "
              f"sample {i_max}; N=3/60 monotone")


def test_criterion_08_capture_region():
    start = time.perf_counter()
    gain = GuidanceParams(3.0)
    limit = ManeuverLimit(alpha=30.0, v_max=V0)  # c = 0.8
    sweep = capture_region_empirical(
        R0, limit, gain, resolution_deg=0.25, kill_radius=1.0, arc_step=1.0, workers=4
    )
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    low_expected = math.degrees(math.asin(0.8))
    high_expected = 180.0 - math.degrees(math.asin(0.64))
    assert len(sweep.boundaries_deg) == 2
    low_err = abs(sweep.boundaries_deg[0] - low_expected)
    high_err = abs(sweep.boundaries_deg[1] - high_expected)
    assert low_err <= 1.0 and high_err <= 1.0
    assert not sweep.inconclusive()
    # full-capture threshold flips exactly at r0 = N / alpha_s
    r_threshold = gain.gain / limit.alpha_s
    assert capture_region_analytic(r_threshold, limit, gain).full
    assert not capture_region_analytic(0.999 * r_threshold, limit, gain).full
    report(8, f"boundaries {sweep.boundaries_deg[0]:.3f}/{sweep.boundaries_deg[1]:.3f} deg vs "
              f"{low_expected:.3f}/{high_expected:.3f} (errs {low_err:.3f}, {high_err:.3f} deg); "
              f"threshold flip at {r_threshold:.0f} m; {elapsed:.1f} s")


def test_criterion_09_quadrature_self_consistency():
    inputs2 = case_inputs(2.0, 120.0)
    theta0 = math.radians(120.0)
    exact = R0 * theta0 / math.sin(theta0)
    assert abs(flight_path_length(inputs2) - exact) <= 1e-10 * exact
    worst = 0.0
    for gain in (3.0, 4.0, 5.0, 6.0):
        inputs = case_inputs(gain, 120.0)
        a = flight_path_length(inputs, rel_tol=1e-10)
        b = flight_path_length(inputs, rel_tol=5e-11)
        change = abs(a - b) / abs(a)
        assert change <= 1e-8
        worst = max(worst, change)
    report(9, f"N=2 exact to 1e-10; tolerance-halving change <= {worst:.1e} for N in 3..6")


def test_criterion_10_terminal_impact_angle(scenario_runs):
    worst = 0.0
    for gain, theta in ALL_CASES:
        traj, metrics = scenario_runs(gain, theta, "time")
        assert metrics.terminated is TerminationReason.INTERCEPT
        expected = terminal_impact_angle(case_inputs(gain, theta))
        err_deg = abs(math.degrees(wrap_angle(float(traj.phi_m[-1]) - expected)))
        assert err_deg <= 0.05, (gain, theta, err_deg)
        worst = max(worst, err_deg)
    report(10, f"terminal flight-path angle across 11 cases: worst {worst:.4f} deg")
