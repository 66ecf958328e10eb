"""Builds the optional Cython kernel extension.

If Cython or a C compiler is unavailable the package still installs and
falls back to ``coslab._kernels_py`` at import time.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("COSLAB_NO_EXT", "") != "1":
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "coslab._kernels",
                    sources=["src/coslab/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
