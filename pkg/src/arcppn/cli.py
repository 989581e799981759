"""Command-line surface.

Subcommands: simulate | closed-form | capture | verify | sweep-figures.
Angles are degrees at this boundary and converted once at parse time.
Exit codes: 0 success, 1 verification failure, 2 usage/config error,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import capture as cap
from . import closed_form as cf
from . import csvio
from .errors import (
    ConfigError,
    DomainError,
    InsufficientEnergyError,
    QuadratureError,
    SimulationError,
)
from .kinematics import (
    CartesianState,
    GuidanceParams,
    PlanarVector,
    SpeedProfile,
    polar_from_cartesian,
)
from .simulate import (
    SimConfig,
    TerminationReason,
    simulate_arclength_domain,
    simulate_time_domain,
)
from .verification import Tolerances, build_verification_report

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

_DOMAINS = ("time", "arc", "both")


@dataclass(frozen=True)
class CaseSpec:
    gain: float
    theta0_deg: float

    @property
    def label(self) -> str:
        return f"N{self.gain:g}_theta{self.theta0_deg:+g}"


@dataclass(frozen=True)
class ScenarioConfig:
    """Validated scenario: initial placement plus a list of (gain, theta0) cases."""

    target: PlanarVector = PlanarVector(0.0, 0.0)
    missile_pos: PlanarVector = PlanarVector(10000.0, 17320.508075688772)
    speed: float = 500.0
    drag: float = 0.1
    kill_radius: float = 0.1
    time_step: float = 1e-3
    arc_step: float = 0.1
    max_steps: int = 4_000_000
    log_every: int = 1
    accel_limit: float | None = None
    domain: str = "time"
    cases: tuple[CaseSpec, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "target": {"x": self.target.x, "y": self.target.y},
            "missile": {"x": self.missile_pos.x, "y": self.missile_pos.y, "speed": self.speed},
            "drag": self.drag,
            "kill_radius": self.kill_radius,
            "time_step": self.time_step,
            "arc_step": self.arc_step,
            "max_steps": self.max_steps,
            "log_every": self.log_every,
            "accel_limit": self.accel_limit,
            "domain": self.domain,
            "cases": [{"gain": c.gain, "theta0_deg": c.theta0_deg} for c in self.cases],
        }

    def build_sim_configs(self) -> list[tuple[CaseSpec, SimConfig]]:
        """Validate every case against module preconditions before any run."""
        try:
            start = CartesianState(pos_m=self.missile_pos, phi_m=0.0, v_m=self.speed)
            polar = polar_from_cartesian(start, self.target)
            speed = SpeedProfile(self.speed, self.drag)
            saturation = None
            if self.accel_limit is not None:
                saturation = cap.SaturationPolicy(cap.ManeuverLimit(self.accel_limit, self.speed))
            configs = []
            for case in self.cases:
                inputs = cf.ClosedFormInputs(
                    r0=polar.r,
                    theta_m0=math.radians(case.theta0_deg),
                    q0=polar.q,
                    gain=GuidanceParams(case.gain),
                )
                configs.append(
                    (
                        case,
                        SimConfig(
                            inputs=inputs,
                            speed=speed,
                            target=self.target,
                            kill_radius=self.kill_radius,
                            time_step=self.time_step,
                            arc_step=self.arc_step,
                            max_steps=self.max_steps,
                            saturation=saturation,
                            log_every=self.log_every,
                        ),
                    )
                )
        except (ValueError, DomainError) as exc:
            raise ConfigError(str(exc)) from exc
        return configs


def _require(mapping: dict, allowed: dict[str, type | tuple], where: str) -> None:
    for key in mapping:
        if key not in allowed:
            raise ConfigError(f"unknown key {where}{key!r}")
    for key, types in allowed.items():
        if key in mapping and not isinstance(mapping[key], types):
            raise ConfigError(f"{where}{key!r} has wrong type {type(mapping[key]).__name__}")


_NUM = (int, float)


def scenario_from_dict(data: dict) -> ScenarioConfig:
    if not isinstance(data, dict):
        raise ConfigError("top-level config must be an object")
    _require(
        data,
        {
            "target": (dict,),
            "missile": (dict,),
            "drag": _NUM,
            "kill_radius": _NUM,
            "time_step": _NUM,
            "arc_step": _NUM,
            "max_steps": (int,),
            "log_every": (int,),
            "accel_limit": (int, float, type(None)),
            "domain": (str,),
            "cases": (list,),
        },
        "",
    )
    defaults = ScenarioConfig()
    target = defaults.target
    if "target" in data:
        _require(data["target"], {"x": _NUM, "y": _NUM}, "target.")
        target = PlanarVector(
            float(data["target"].get("x", 0.0)), float(data["target"].get("y", 0.0))
        )
    missile_pos, speed = defaults.missile_pos, defaults.speed
    if "missile" in data:
        _require(data["missile"], {"x": _NUM, "y": _NUM, "speed": _NUM}, "missile.")
        m = data["missile"]
        missile_pos = PlanarVector(
            float(m.get("x", missile_pos.x)), float(m.get("y", missile_pos.y))
        )
        speed = float(m.get("speed", speed))
    domain = data.get("domain", defaults.domain)
    if domain not in _DOMAINS:
        raise ConfigError(f"domain must be one of {_DOMAINS}, got {domain!r}")
    cases = []
    for i, entry in enumerate(data.get("cases", [])):
        if not isinstance(entry, dict):
            raise ConfigError(f"cases[{i}] must be an object")
        _require(entry, {"gain": _NUM, "theta0_deg": _NUM}, f"cases[{i}].")
        if "gain" not in entry or "theta0_deg" not in entry:
            raise ConfigError(f"cases[{i}] needs both 'gain' and 'theta0_deg'")
        cases.append(CaseSpec(float(entry["gain"]), float(entry["theta0_deg"])))
    accel_limit = data.get("accel_limit", defaults.accel_limit)
    cfg = ScenarioConfig(
        target=target,
        missile_pos=missile_pos,
        speed=speed,
        drag=float(data.get("drag", defaults.drag)),
        kill_radius=float(data.get("kill_radius", defaults.kill_radius)),
        time_step=float(data.get("time_step", defaults.time_step)),
        arc_step=float(data.get("arc_step", defaults.arc_step)),
        max_steps=int(data.get("max_steps", defaults.max_steps)),
        log_every=int(data.get("log_every", defaults.log_every)),
        accel_limit=None if accel_limit is None else float(accel_limit),
        domain=domain,
        cases=tuple(cases),
    )
    cfg.build_sim_configs()  # validation only
    return cfg


def builtin_scenario(number: int) -> ScenarioConfig:
    """Bundled example scenarios: 1 = leading-angle sweep at N = 3,
    2 = gain sweep at theta0 = 120 deg."""
    if number == 1:
        cases = tuple(CaseSpec(3.0, t) for t in (-60.0, -30.0, 30.0, 60.0, 90.0, 120.0))
    elif number == 2:
        cases = tuple(CaseSpec(float(n), 120.0) for n in (2, 3, 4, 5, 6))
    else:
        raise ConfigError(f"no built-in scenario {number}")
    return ScenarioConfig(cases=cases)


def load_scenario(path: Path) -> ScenarioConfig:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return scenario_from_dict(data)


# --- subcommand implementations ---


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"bad number list {text!r}") from exc


def _run_case(item: tuple[CaseSpec, SimConfig], domain: str):
    case, sim_cfg = item
    results = {}
    if domain in ("time", "both"):
        results["time"] = simulate_time_domain(sim_cfg)
    if domain in ("arc", "both"):
        results["arc"] = simulate_arclength_domain(sim_cfg)
    return case, results


def cmd_simulate(args) -> int:
    if args.config is not None:
        scenario = load_scenario(Path(args.config))
    else:
        scenario = builtin_scenario(args.scenario)

    overrides = {}
    if args.drag is not None:
        overrides["drag"] = args.drag
    if args.step is not None:
        overrides["time_step"] = args.step
    if args.arc_step is not None:
        overrides["arc_step"] = args.arc_step
    if args.domain is not None:
        overrides["domain"] = args.domain
    if args.gain is not None or args.theta0_deg is not None:
        gains = (
            _parse_float_list(args.gain)
            if args.gain is not None
            else sorted({c.gain for c in scenario.cases}) or [3.0]
        )
        thetas = (
            _parse_float_list(args.theta0_deg)
            if args.theta0_deg is not None
            else sorted({c.theta0_deg for c in scenario.cases}) or [120.0]
        )
        overrides["cases"] = tuple(CaseSpec(g, t) for g in gains for t in thetas)
    if overrides:
        from dataclasses import replace

        scenario = replace(scenario, **overrides)

    if args.dump_config:
        print(json.dumps(scenario.to_dict(), indent=2, sort_keys=True))
        return EXIT_OK

    items = scenario.build_sim_configs()
    if not items:
        print("warning: empty case list, nothing to do", file=sys.stderr)
        return EXIT_OK

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            outcomes = list(pool.map(lambda it: _run_case(it, scenario.domain), items))
    else:
        outcomes = [_run_case(item, scenario.domain) for item in items]

    failed = []
    for case, results in outcomes:  # collector writes in case order
        for domain, (traj, metrics) in results.items():
            stem = f"{domain}_{case.label}"
            csvio.write_trajectory_csv(out_dir / f"traj_{stem}.csv", traj)
            csvio.write_kv_csv(
                out_dir / f"summary_{stem}.csv",
                csvio.summary_record(
                    metrics, case=case.label, domain=domain, gain=case.gain,
                    theta0_deg=case.theta0_deg,
                ),
            )
            print(
                f"{case.label} [{domain}] path={metrics.flight_path:.2f} m "
                f"increment={metrics.curvature_increment:.5f} rad "
                f"max_r={metrics.max_r:.2f} m miss={metrics.miss_distance:.3g} m "
                f"({metrics.terminated.value})"
            )
            if metrics.terminated is not TerminationReason.INTERCEPT:
                failed.append(f"{case.label} [{domain}]: {metrics.terminated.value}")
    if failed:
        for line in failed:
            print(f"failed run: {line}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_closed_form(args) -> int:
    inputs = cf.ClosedFormInputs(
        r0=args.r0,
        theta_m0=math.radians(args.theta0_deg),
        q0=math.radians(args.q0_deg),
        gain=GuidanceParams(args.gain),
    )
    path = cf.flight_path_length(inputs)
    record = {
        "gain": args.gain,
        "theta0_deg": args.theta0_deg,
        "r0": args.r0,
        "q0_deg": args.q0_deg,
        "max_relative_distance": cf.max_relative_distance(inputs),
        "max_curvature": cf.max_curvature(inputs) if args.gain > 2.0 else float("nan"),
        "curvature_increment": cf.curvature_increment(inputs),
        "flight_path": path,
        "terminal_q_deg": math.degrees(cf.terminal_impact_angle(inputs)),
    }
    try:
        record["flight_time"] = cf.flight_time_under_constant_drag(
            path, SpeedProfile(args.v0, args.drag)
        )
    except InsufficientEnergyError:
        record["flight_time"] = float("nan")

    for key, value in record.items():
        print(f"{key}: {csvio.fmt(value)}")

    if args.out is not None:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        label = f"N{args.gain:g}_theta{args.theta0_deg:+g}"
        csvio.write_kv_csv(out_dir / f"closed_form_{label}.csv", record)
        points = cf.profile(inputs, samples=args.samples)
        csvio.write_rows(
            out_dir / f"profile_{label}.csv",
            ("r", "r_over_r0", "q_prime", "r_prime", "theta_m_deg", "k_m"),
            (
                (p.r, p.r / args.r0, p.q_prime, p.r_prime, math.degrees(p.theta_m), p.k_m)
                for p in points
            ),
        )
        print(f"wrote {out_dir}/closed_form_{label}.csv and profile_{label}.csv")
    return EXIT_OK


def _parse_sweep(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"sweep spec must be lo:hi:count, got {text!r}")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if count < 2 or hi <= lo:
        raise ConfigError(f"bad sweep spec {text!r}")
    return lo, hi, count


def cmd_capture(args) -> int:
    gain = GuidanceParams(args.gain)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    def boundary_row(r0: float, v_max: float):
        limit = cap.ManeuverLimit(args.alpha, v_max)
        region = cap.capture_region_analytic(r0, limit, gain)
        c = r0 * limit.alpha_s / gain.gain
        if region.full:
            return (r0, v_max, c, float("nan"), float("nan"), True)
        (_, low), (high, _) = region.intervals
        return (r0, v_max, c, math.degrees(low), math.degrees(high), False)

    header = ("r0", "v_max", "c", "low_boundary_deg", "high_boundary_deg", "full")
    if args.sweep_r0 is not None:
        lo, hi, count = _parse_sweep(args.sweep_r0)
        rows = [
            boundary_row(lo + (hi - lo) * i / (count - 1), args.vmax) for i in range(count)
        ]
        csvio.write_rows(out_dir / "capture_boundary_vs_range.csv", header, rows)
        print(f"wrote {out_dir}/capture_boundary_vs_range.csv ({count} rows)")
        return EXIT_OK
    if args.sweep_v0 is not None:
        lo, hi, count = _parse_sweep(args.sweep_v0)
        rows = [
            boundary_row(args.r0, lo + (hi - lo) * i / (count - 1)) for i in range(count)
        ]
        csvio.write_rows(out_dir / "capture_boundary_vs_speed.csv", header, rows)
        print(f"wrote {out_dir}/capture_boundary_vs_speed.csv ({count} rows)")
        return EXIT_OK

    limit = cap.ManeuverLimit(args.alpha, args.vmax)
    region = cap.capture_region_analytic(args.r0, limit, gain)
    record: dict[str, object] = {
        "r0": args.r0,
        "gain": args.gain,
        "alpha": args.alpha,
        "v_max": args.vmax,
        "alpha_s": limit.alpha_s,
        "c": args.r0 * limit.alpha_s / gain.gain,
        "full": region.full,
        "full_capture_min_range": cap.full_capture_min_range(gain, limit),
        "max_initial_speed_full_capture": cap.max_initial_speed_for_full_capture(
            args.r0, gain, args.alpha
        ),
    }
    if not region.full:
        (_, low), (high, _) = region.intervals
        record["analytic_low_deg"] = math.degrees(low)
        record["analytic_high_deg"] = math.degrees(high)

    if args.empirical:
        sweep = cap.capture_region_empirical(
            args.r0,
            limit,
            gain,
            resolution_deg=args.resolution_deg,
            kill_radius=args.kill_radius,
            arc_step=args.arc_step,
            workers=args.workers,
        )
        csvio.write_rows(
            out_dir / "capture_sweep.csv",
            ("theta_deg", "classification", "limiting_k", "analytic_inside"),
            (
                (p.theta_deg, p.classification, p.limiting_k, p.analytic_inside)
                for p in sweep.points
            ),
        )
        record["empirical_boundaries_deg"] = ";".join(
            format(b, ".6g") for b in sweep.boundaries_deg
        )
        record["inconclusive_points"] = len(sweep.inconclusive())
        print(f"wrote {out_dir}/capture_sweep.csv ({len(sweep.points)} rows)")

    csvio.write_kv_csv(out_dir / "capture_summary.csv", record)
    for key, value in record.items():
        print(f"{key}: {csvio.fmt(value)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    tol = Tolerances()
    report = build_verification_report(
        tolerances=tol,
        time_step=args.time_step,
        include_simulation=not args.analytic_only,
        workers=args.workers,
    )
    width = max(len(c.case) for c in report.cells)
    for cell in report.cells:
        status = "PASS" if cell.passed else "FAIL"
        err = (
            f"rel {cell.rel_error:.2e} <= {cell.tolerance:.0e}"
            if cell.tolerance_kind == "relative"
            else f"abs {cell.abs_error:.2e} <= {cell.tolerance:.0e}"
        )
        print(
            f"[{status}] {cell.table:19s} {cell.case:{width}s} "
            f"{cell.quantity:19s} {cell.route:10s} "
            f"computed {cell.computed:.6f} vs {cell.reference:.6f} ({err})"
        )
    n_fail = len(report.failures())
    print(f"{len(report.cells) - n_fail}/{len(report.cells)} cells passed")
    if args.out is not None:
        csvio.write_rows(
            Path(args.out),
            (
                "table", "case", "quantity", "route", "computed", "reference",
                "abs_error", "rel_error", "tolerance", "tolerance_kind", "passed",
            ),
            (
                (
                    c.table, c.case, c.quantity, c.route, c.computed, c.reference,
                    c.abs_error, c.rel_error, c.tolerance, c.tolerance_kind, c.passed,
                )
                for c in report.cells
            ),
        )
        print(f"wrote {args.out}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAIL


def cmd_sweep_figures(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    gains = _parse_float_list(args.gains)
    written = []

    # profile curves vs r/r0 at fixed theta0, one column group per gain
    ratios = [i / (args.profile_samples - 1.0) for i in range(1, args.profile_samples)]
    theta0 = math.radians(args.theta0_deg)
    per_gain = []
    for g in gains:
        inputs = cf.ClosedFormInputs(args.r0, theta0, 0.0, GuidanceParams(g))
        cols = []
        for ratio in ratios:
            r = ratio * args.r0
            cols.append(
                (
                    cf.los_rate_at(inputs, r),
                    cf.curvature_at(inputs, r),
                    math.degrees(cf.leading_angle_at(inputs, r, branch="inbound")),
                )
            )
        per_gain.append(cols)
    for name, col in (
        ("profile_los_rate_by_gain.csv", 0),
        ("profile_curvature_by_gain.csv", 1),
        ("profile_leading_angle_by_gain.csv", 2),
    ):
        path = out_dir / name
        csvio.write_rows(
            path,
            ["r_over_r0"] + [f"N{g:g}" for g in gains],
            (
                [ratios[j]] + [per_gain[gi][j][col] for gi in range(len(gains))]
                for j in range(len(ratios))
            ),
        )
        written.append(path)

    # scalar metrics vs initial leading angle, one column per gain
    thetas = [0.5 * k for k in range(1, 360)]  # (0, 180) deg
    metric_files = {
        "metric_max_distance.csv": lambda i: cf.max_relative_distance(i),
        "metric_max_curvature.csv": lambda i: (
            cf.max_curvature(i) if i.n > 2.0 else float("nan")
        ),
        "metric_increment.csv": lambda i: cf.curvature_increment(i),
        "metric_flight_path.csv": lambda i: cf.flight_path_length(i, rel_tol=1e-9),
    }
    for name, metric in metric_files.items():
        rows = []
        for theta_deg in thetas:
            row = [theta_deg]
            for g in gains:
                inputs = cf.ClosedFormInputs(
                    args.r0, math.radians(theta_deg), 0.0, GuidanceParams(g)
                )
                row.append(metric(inputs))
            rows.append(row)
        path = out_dir / name
        csvio.write_rows(path, ["theta0_deg"] + [f"N{g:g}" for g in gains], rows)
        written.append(path)

    for path in written:
        print(f"wrote {path}")
    return EXIT_OK


# --- argument parsing ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcppn",
        description=(
            "Planar pure-proportional-navigation toolkit: closed-form engagement "
            "analytics in the arc-length domain, cross-validated by time-domain "
            "and arc-length-domain simulators."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run scenario cases, write trajectory CSVs")
    p_sim.add_argument("--config", help="scenario JSON path")
    p_sim.add_argument("--scenario", type=int, default=1, choices=(1, 2),
                       help="built-in scenario when no --config (default 1)")
    p_sim.add_argument("--out", default="out", help="output directory")
    p_sim.add_argument("--gain", help="comma list; overrides case gains")
    p_sim.add_argument("--theta0-deg", help="comma list; overrides case leading angles")
    p_sim.add_argument("--drag", type=float, help="drag deceleration m/s^2")
    p_sim.add_argument("--step", type=float, help="time-domain step, s")
    p_sim.add_argument("--arc-step", type=float, help="arc-length step, m")
    p_sim.add_argument("--domain", choices=_DOMAINS)
    p_sim.add_argument("--workers", type=int, default=1)
    p_sim.add_argument("--dump-config", action="store_true",
                       help="print the effective config JSON and exit")
    p_sim.set_defaults(func=cmd_simulate)

    p_cf = sub.add_parser("closed-form", help="closed-form metrics and profile data")
    p_cf.add_argument("--gain", type=float, required=True)
    p_cf.add_argument("--theta0-deg", type=float, required=True)
    p_cf.add_argument("--r0", type=float, default=20000.0)
    p_cf.add_argument("--q0-deg", type=float, default=-120.0)
    p_cf.add_argument("--v0", type=float, default=500.0)
    p_cf.add_argument("--drag", type=float, default=0.1)
    p_cf.add_argument("--samples", type=int, default=200)
    p_cf.add_argument("--out", help="output directory for CSVs")
    p_cf.set_defaults(func=cmd_closed_form)

    p_cap = sub.add_parser("capture", help="capture-region analysis")
    p_cap.add_argument("--alpha", type=float, required=True,
                       help="lateral acceleration ceiling, m/s^2")
    p_cap.add_argument("--vmax", type=float, default=500.0,
                       help="largest anticipated speed, m/s")
    p_cap.add_argument("--gain", type=float, default=3.0)
    p_cap.add_argument("--r0", type=float, default=20000.0)
    p_cap.add_argument("--sweep-r0", help="lo:hi:count sweep of r0")
    p_cap.add_argument("--sweep-v0", help="lo:hi:count sweep of v_max")
    p_cap.add_argument("--empirical", action="store_true",
                       help="add a saturated-simulation sweep")
    p_cap.add_argument("--resolution-deg", type=float, default=0.25)
    p_cap.add_argument("--kill-radius", type=float, default=1.0)
    p_cap.add_argument("--arc-step", type=float, default=1.0)
    p_cap.add_argument("--workers", type=int, default=1)
    p_cap.add_argument("--out", default="out")
    p_cap.set_defaults(func=cmd_capture)

    p_ver = sub.add_parser("verify", help="regenerate reference tables, compare cells")
    p_ver.add_argument("--time-step", type=float, default=1e-3)
    p_ver.add_argument("--analytic-only", action="store_true",
                       help="skip the simulation route")
    p_ver.add_argument("--workers", type=int, default=1)
    p_ver.add_argument("--out", help="write the comparison matrix CSV here")
    p_ver.set_defaults(func=cmd_verify)

    p_fig = sub.add_parser("sweep-figures", help="emit figure-ready CSV curves")
    p_fig.add_argument("--out", default="figures")
    p_fig.add_argument("--gains", default="2,3,4,5,6")
    p_fig.add_argument("--theta0-deg", type=float, default=60.0,
                       help="leading angle for the profile curves")
    p_fig.add_argument("--r0", type=float, default=20000.0)
    p_fig.add_argument("--profile-samples", type=int, default=201)
    p_fig.set_defaults(func=cmd_sweep_figures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, SimulationError, InsufficientEnergyError, DomainError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
