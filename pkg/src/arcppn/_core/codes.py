"""Integer status codes shared by the compiled and pure-Python kernels."""

INTERCEPT = 0
HORIZON = 1
DIVERGED = 2
SPEED_EXHAUSTED = 3
NUMERIC = 4
