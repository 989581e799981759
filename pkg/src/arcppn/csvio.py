"""CSV export with a fixed, locale-independent format.

One header row, '.' decimal separator, no thousands separators, 12
significant digits.  Identical inputs produce byte-identical files.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Iterable, Mapping

from .simulate import SummaryMetrics, Trajectory

TRAJECTORY_COLUMNS = (
    "t",
    "s_m",
    "x",
    "y",
    "v_m",
    "phi_m_deg",
    "r",
    "q_deg",
    "theta_m_deg",
    "q_dot",
    "q_prime",
    "k_m",
    "a_m",
)


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return format(value, ".12g")
    return str(value)


def write_rows(path: Path, header: Iterable[str], rows: Iterable[Iterable]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")


def write_trajectory_csv(path: Path, traj: Trajectory) -> None:
    deg = 180.0 / math.pi
    columns = (
        traj.t,
        traj.s_m,
        traj.x,
        traj.y,
        traj.v_m,
        traj.phi_m * deg,
        traj.r,
        traj.q * deg,
        traj.theta_m * deg,
        traj.q_dot,
        traj.q_prime,
        traj.k_m,
        traj.a_m,
    )
    write_rows(path, TRAJECTORY_COLUMNS, zip(*(col.tolist() for col in columns)))


def write_kv_csv(path: Path, record: Mapping[str, object]) -> None:
    """Flat key-value record, one pair per row."""
    write_rows(path, ("key", "value"), ((k, v) for k, v in record.items()))


def summary_record(metrics: SummaryMetrics, **extra) -> dict[str, object]:
    record: dict[str, object] = dict(extra)
    record.update(
        miss_distance=metrics.miss_distance,
        flight_time=metrics.flight_time,
        flight_path=metrics.flight_path,
        curvature_increment=metrics.curvature_increment,
        max_r=metrics.max_r,
        max_k=metrics.max_k,
        terminal_q_deg=math.degrees(metrics.terminal_q),
        terminated=metrics.terminated.value,
    )
    return record
