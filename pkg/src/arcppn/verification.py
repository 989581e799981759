"""Regenerate the reference tables and compare cell by cell.

Every case is recomputed twice: analytically (closed forms, with the flight
path by quadrature) and by the time-domain simulator under the reference
drag.  Analytic cells are held to a relative tolerance at the tables' print
precision; simulation cells to absolute tolerances matching the scatter
between the published numerical and simulation rows.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import reference_data as ref
from .closed_form import (
    ClosedFormInputs,
    curvature_increment,
    flight_path_length,
    max_relative_distance,
)
from .kinematics import GuidanceParams, SpeedProfile
from .simulate import SimConfig, simulate_time_domain


@dataclass(frozen=True)
class CellComparison:
    table: str
    case: str
    quantity: str  # flight_path | curvature_increment | max_r
    route: str  # analytic | simulation
    computed: float
    reference: float
    abs_error: float
    rel_error: float
    tolerance: float
    tolerance_kind: str  # relative | absolute
    passed: bool


@dataclass(frozen=True)
class Tolerances:
    analytic_rel: float = ref.ANALYTIC_REL_TOL
    sim_path_abs: float = ref.SIM_PATH_TOL
    sim_increment_abs: float = ref.SIM_INCREMENT_TOL
    sim_max_r_abs: float = ref.SIM_MAX_R_TOL


@dataclass
class VerificationReport:
    cells: list[CellComparison] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    def failures(self) -> list[CellComparison]:
        return [cell for cell in self.cells if not cell.passed]


def _compare(
    table: str,
    case: str,
    quantity: str,
    route: str,
    computed: float,
    reference: float,
    tolerance: float,
    kind: str,
) -> CellComparison:
    abs_error = abs(computed - reference)
    rel_error = abs_error / abs(reference) if reference != 0.0 else math.inf
    passed = rel_error <= tolerance if kind == "relative" else abs_error <= tolerance
    return CellComparison(
        table=table,
        case=case,
        quantity=quantity,
        route=route,
        computed=computed,
        reference=reference,
        abs_error=abs_error,
        rel_error=rel_error,
        tolerance=tolerance,
        tolerance_kind=kind,
        passed=passed,
    )


def _case_inputs(case: ref.ReferenceCase) -> ClosedFormInputs:
    return ClosedFormInputs(
        r0=ref.REFERENCE_R0,
        theta_m0=math.radians(case.theta0_deg),
        q0=math.radians(ref.REFERENCE_Q0_DEG),
        gain=GuidanceParams(case.gain),
    )


def _case_sim_config(case: ref.ReferenceCase, time_step: float) -> SimConfig:
    return SimConfig(
        inputs=_case_inputs(case),
        speed=SpeedProfile(ref.REFERENCE_V0, ref.REFERENCE_DRAG),
        time_step=time_step,
    )


def build_verification_report(
    tolerances: Tolerances | None = None,
    time_step: float = 1e-3,
    include_simulation: bool = True,
    workers: int = 1,
) -> VerificationReport:
    tol = tolerances or Tolerances()
    report = VerificationReport()

    all_cases = [
        (table, case) for table, cases in ref.TABLES.items() for case in cases
    ]
    for table, case in all_cases:
        inputs = _case_inputs(case)
        report.cells.append(
            _compare(
                table, case.label, "flight_path", "analytic",
                flight_path_length(inputs), case.path_numerical,
                tol.analytic_rel, "relative",
            )
        )
        report.cells.append(
            _compare(
                table, case.label, "curvature_increment", "analytic",
                curvature_increment(inputs), case.increment_analytic,
                tol.analytic_rel, "relative",
            )
        )
        report.cells.append(
            _compare(
                table, case.label, "max_r", "analytic",
                max_relative_distance(inputs), case.max_r_analytic,
                tol.analytic_rel, "relative",
            )
        )

    if include_simulation:
        # identical (gain, theta0) cases appear in both tables; run once
        unique = {}
        for table, case in all_cases:
            unique.setdefault((case.gain, case.theta0_deg), case)

        def run(case: ref.ReferenceCase):
            _, metrics = simulate_time_domain(_case_sim_config(case, time_step))
            return metrics

        keys = list(unique)
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                metrics_list = list(pool.map(run, (unique[k] for k in keys)))
        else:
            metrics_list = [run(unique[k]) for k in keys]
        by_key = dict(zip(keys, metrics_list))

        for table, case in all_cases:
            metrics = by_key[(case.gain, case.theta0_deg)]
            report.cells.append(
                _compare(
                    table, case.label, "flight_path", "simulation",
                    metrics.flight_path, case.path_simulation,
                    tol.sim_path_abs, "absolute",
                )
            )
            report.cells.append(
                _compare(
                    table, case.label, "curvature_increment", "simulation",
                    metrics.curvature_increment, case.increment_simulation,
                    tol.sim_increment_abs, "absolute",
                )
            )
            report.cells.append(
                _compare(
                    table, case.label, "max_r", "simulation",
                    metrics.max_r, case.max_r_simulation,
                    tol.sim_max_r_abs, "absolute",
                )
            )
    return report
