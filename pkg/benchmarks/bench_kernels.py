#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same engagements through both backends and reports wall time,
million steps per second, and the speedup.  The compiled extension must be
built (pip install -e . or python setup.py build_ext --inplace) for the
comparison; otherwise only the fallback column appears.
"""

import math
import time

from arcppn._core import pykernels

try:
    from arcppn._core import _ckernels
except ImportError:
    _ckernels = None

TIME_ARGS = dict(
    x0=10000.0,
    y0=17320.508075688772,
    phi0=0.0,
    v0=500.0,
    target_x=0.0,
    target_y=0.0,
    nav_gain=3.0,
    drag=0.1,
    dt=1e-3,
    kill_radius=0.1,
    max_steps=2_000_000,
    accel_limit=0.0,
    escape_radius=250000.0,
    log_every=1,
)

ARC_ARGS = dict(
    r0=20000.0,
    theta0=math.radians(120.0),
    q0=math.radians(-120.0),
    nav_gain=3.0,
    ds=0.1,
    kill_radius=0.1,
    max_steps=2_000_000,
    curvature_limit=0.0,
    escape_radius=250000.0,
    log_every=1,
)


def run(kernel, kwargs, repeats=3):
    best = math.inf
    steps = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        log, *_ = kernel(**kwargs)
        best = min(best, time.perf_counter() - t0)
        steps = log.shape[0]
    return best, steps


def main():
    cases = [
        ("time-domain (dt=1 ms)", "time_kernel", TIME_ARGS),
        ("arc-length (ds=0.1 m)", "arc_kernel", ARC_ARGS),
    ]
    print(f"{'case':24s} {'backend':10s} {'steps':>9s} {'wall [s]':>9s} {'Msteps/s':>9s} {'speedup':>8s}")
    for name, attr, kwargs in cases:
        py_t, py_steps = run(getattr(pykernels, attr), kwargs)
        print(f"{name:24s} {'python':10s} {py_steps:9d} {py_t:9.3f} {py_steps / py_t / 1e6:9.2f} {'1.0x':>8s}")
        if _ckernels is not None:
            c_t, c_steps = run(getattr(_ckernels, attr), kwargs)
            print(
                f"{name:24s} {'compiled':10s} {c_steps:9d} {c_t:9.3f} "
                f"{c_steps / c_t / 1e6:9.2f} {py_t / c_t:7.1f}x"
            )
        else:
            print(f"{name:24s} {'compiled':10s} {'(extension not built)':>9s}")


if __name__ == "__main__":
    main()
