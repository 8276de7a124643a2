"""Build script: compiles the optional Cython kernel extension.

Set ALPHAFN_PURE_PYTHON=1 to skip the extension entirely; the package
falls back to the pure-Python kernels at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ALPHAFN_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "alphafn._kernels_cy",
                    ["src/alphafn/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
