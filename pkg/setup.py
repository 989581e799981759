"""Build shim for the optional compiled kernel extension.

The package is pure Python plus one Cython extension for the hot RK4 loops.
If Cython or a C compiler is unavailable the extension is skipped and the
pure-Python kernels are used at import time instead.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ARCPPN_SKIP_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/arcppn/_core/_ckernels.pyx"],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
