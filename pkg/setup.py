"""Build script: compiles the optional quadrature kernel extension.

The package works without the extension (a pure NumPy fallback is selected
at import time), so a failed compile should not abort installation.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FROZEN_PLANET_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "frozenplanet._kernels",
                    sources=["src/frozenplanet/_kernels.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
