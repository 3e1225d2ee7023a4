"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so a missing Cython toolchain only
costs speed, not correctness.
"""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/extremal_split/linalg/_kernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    warnings.warn(f"Cython unavailable, building pure-Python only: {exc}")
    ext_modules = []

setup(ext_modules=ext_modules)
