"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); set FMZV_SKIP_EXT=1 to force a
pure-Python install.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("FMZV_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "fmzv._ext",
                    ["src/fmzv/_ext.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        extensions = []

setup(ext_modules=extensions)
