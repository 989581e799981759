"""Published reference results used by the verify command.

Two validation tables for the baseline engagement (r0 = 20000 m,
q0 = -120 deg, v0 = 500 m/s, drag 0.1 m/s^2): a sweep over the initial
leading angle at N = 3 and a sweep over the guidance gain at
theta_m0 = 120 deg.  Each case carries the source's numerically evaluated
("numerical") and simulated ("simulation") values for flight path (m),
curvature increment (rad) and maximum relative distance (m), transcribed
verbatim.

Data revision 1.  One transcription note: the gain-sweep simulation row
prints the N = 4 max distance as "2.0982.30", an obvious misprint of
20982.30 (the analytic value it equals elsewhere in the row); the corrected
number is stored here.
"""

from __future__ import annotations

from dataclasses import dataclass

REFERENCE_R0 = 20000.0
REFERENCE_Q0_DEG = -120.0
REFERENCE_V0 = 500.0
REFERENCE_DRAG = 0.1

# default acceptance: analytic cells relative, simulation cells absolute
ANALYTIC_REL_TOL = 5e-6
SIM_PATH_TOL = 1.0  # m
SIM_INCREMENT_TOL = 1e-4  # rad
SIM_MAX_R_TOL = 0.5  # m


@dataclass(frozen=True)
class ReferenceCase:
    label: str
    gain: float
    theta0_deg: float
    path_numerical: float
    path_simulation: float
    increment_analytic: float
    increment_simulation: float
    max_r_analytic: float
    max_r_simulation: float


LEADING_ANGLE_SWEEP: tuple[ReferenceCase, ...] = (
    ReferenceCase("theta-60", 3.0, -60.0, 22414.26, 22414.11, 1.57080, 1.57083, 20000.0, 20000.0),
    ReferenceCase("theta-30", 3.0, -30.0, 20561.14, 20560.25, 0.785398, 0.785417, 20000.0, 20000.0),
    ReferenceCase("theta+30", 3.0, 30.0, 20561.13, 20560.75, 0.785398, 0.785417, 20000.0, 20000.0),
    ReferenceCase("theta+60", 3.0, 60.0, 22414.26, 22414.11, 1.57080, 1.57083, 20000.0, 20000.0),
    ReferenceCase("theta+90", 3.0, 90.0, 26220.58, 26220.54, 2.35619, 2.35623, 20000.0, 20000.0),
    ReferenceCase("theta+120", 3.0, 120.0, 33937.42, 33936.96, 3.14159, 3.14163, 21491.40, 21491.40),
)

GAIN_SWEEP: tuple[ReferenceCase, ...] = (
    ReferenceCase("N2", 2.0, 120.0, 48367.98, 48367.83, 4.18879, 4.18886, 23094.01, 23094.01),
    ReferenceCase("N3", 3.0, 120.0, 33937.42, 33936.98, 3.14159, 3.14163, 21491.40, 21491.40),
    ReferenceCase("N4", 4.0, 120.0, 29259.56, 29259.25, 2.79253, 2.79257, 20982.30, 20982.30),
    ReferenceCase("N5", 5.0, 120.0, 26936.62, 26936.30, 2.61799, 2.61805, 20732.29, 20732.29),
    ReferenceCase("N6", 6.0, 120.0, 25546.55, 25546.13, 2.51327, 2.51334, 20583.72, 20583.72),
)

TABLES: dict[str, tuple[ReferenceCase, ...]] = {
    "leading-angle-sweep": LEADING_ANGLE_SWEEP,
    "gain-sweep": GAIN_SWEEP,
}
