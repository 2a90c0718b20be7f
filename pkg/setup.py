"""Build script: compiles the optional Cython kernel.

If Cython or a C compiler is unavailable the build falls back to the pure
NumPy kernel; the package selects the backend at import time.
"""

from __future__ import annotations

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SIEGELZETA_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/siegelzeta/_kernels/_corecy.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
