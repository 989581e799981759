import math

import pytest

from arcppn import (
    ClosedFormInputs,
    GuidanceParams,
    SimConfig,
    SpeedProfile,
    simulate_arclength_domain,
    simulate_time_domain,
)

R0 = 20000.0
Q0_DEG = -120.0
V0 = 500.0

# (gain, theta0_deg) cases of the two bundled scenarios
SCENARIO_1 = tuple((3.0, t) for t in (-60.0, -30.0, 30.0, 60.0, 90.0, 120.0))
SCENARIO_2 = tuple((float(n), 120.0) for n in (2, 3, 4, 5, 6))
ALL_CASES = SCENARIO_1 + SCENARIO_2


def make_config(gain, theta0_deg, drag=0.1, time_step=1e-3, arc_step=0.1, **kwargs):
    inputs = ClosedFormInputs(
        R0, math.radians(theta0_deg), math.radians(Q0_DEG), GuidanceParams(gain)
    )
    return SimConfig(
        inputs=inputs,
        speed=SpeedProfile(V0, drag),
        time_step=time_step,
        arc_step=arc_step,
        **kwargs,
    )


@pytest.fixture(scope="session")
def scenario_runs():
    """Memoized scenario simulations shared across the suite."""
    cache = {}

    def run(gain, theta0_deg, domain="time", drag=0.1, time_step=1e-3, arc_step=0.1):
        key = (gain, theta0_deg, domain, drag, time_step, arc_step)
        if key not in cache:
            cfg = make_config(gain, theta0_deg, drag=drag, time_step=time_step, arc_step=arc_step)
            sim = simulate_time_domain if domain == "time" else simulate_arclength_domain
            cache[key] = sim(cfg)
        return cache[key]

    return run
