"""The compiled extension and the pure-Python kernels must be functional twins."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from arcppn import _core
from arcppn._core import codes, pykernels

_ckernels = pytest.importorskip(
    "arcppn._core._ckernels", reason="compiled extension not built"
)

TIME_ARGS = dict(
    x0=10000.0,
    y0=17320.508075688772,
    phi0=0.0,
    v0=500.0,
    target_x=0.0,
    target_y=0.0,
    nav_gain=3.0,
    drag=0.1,
    dt=1e-2,
    kill_radius=0.1,
    max_steps=50000,
    accel_limit=0.0,
    escape_radius=250000.0,
    log_every=1,
)

ARC_ARGS = dict(
    r0=20000.0,
    theta0=math.radians(120.0),
    q0=math.radians(-120.0),
    nav_gain=3.0,
    ds=1.0,
    kill_radius=0.1,
    max_steps=100000,
    curvature_limit=0.0,
    escape_radius=250000.0,
    log_every=1,
)


def assert_results_match(a, b):
    log_a, log_b = a[0], b[0]
    assert log_a.shape == log_b.shape
    assert np.max(np.abs(log_a - log_b)) < 1e-9
    assert a[1] == b[1]  # status
    for i in (2, 3, 4, 5, 6, 7, 9):  # miss, t*, s*, min triple, max_demand
        va, vb = a[i], b[i]
        if isinstance(va, float) and math.isnan(va):
            assert math.isnan(vb)
        else:
            assert va == pytest.approx(vb, rel=1e-9, abs=1e-12)
    assert a[10] == b[10]  # saturated flag


def test_time_kernel_twins():
    assert_results_match(_ckernels.time_kernel(**TIME_ARGS), pykernels.time_kernel(**TIME_ARGS))


def test_time_kernel_twins_with_clamp():
    args = dict(TIME_ARGS, accel_limit=25.0)
    assert_results_match(_ckernels.time_kernel(**args), pykernels.time_kernel(**args))


def test_arc_kernel_twins():
    assert_results_match(_ckernels.arc_kernel(**ARC_ARGS), pykernels.arc_kernel(**ARC_ARGS))


def test_arc_kernel_twins_with_clamp():
    args = dict(ARC_ARGS, curvature_limit=1.2e-4)
    assert_results_match(_ckernels.arc_kernel(**args), pykernels.arc_kernel(**args))


def test_arc_kernel_twins_on_divergent_run():
    args = dict(ARC_ARGS, theta0=math.pi, escape_radius=40000.0)
    ra = _ckernels.arc_kernel(**args)
    rb = pykernels.arc_kernel(**args)
    assert ra[1] == rb[1] == codes.DIVERGED
    assert_results_match(ra, rb)


def test_default_backend_is_compiled_here():
    assert _core.BACKEND == "compiled"


def test_env_var_forces_python_backend():
    import arcppn

    src_dir = os.path.dirname(os.path.dirname(os.path.abspath(arcppn.__file__)))
    env = dict(os.environ, ARCPPN_PURE_PYTHON="1")
    env["PYTHONPATH"] = src_dir + os.pathsep + env.get("PYTHONPATH", "")
    out = subprocess.run(
        [sys.executable, "-c", "import arcppn._core as c; print(c.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_decimated_logging_keeps_endpoints():
    args = dict(ARC_ARGS, log_every=1000)
    log, status, *_ = _ckernels.arc_kernel(**args)
    assert status == codes.INTERCEPT
    assert log[0, 0] == 0.0  # initial node
    full_log, *_ = _ckernels.arc_kernel(**ARC_ARGS)
    # final logged node matches the full-resolution final node
    assert log[-1, 0] == pytest.approx(full_log[-1, 0])
    assert log.shape[0] < full_log.shape[0] // 100
