"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python twin of
the kernels is selected at import time), so any failure to build it is
non-fatal.  Set TLKIT_NO_EXT=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TLKIT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tlkit._kernels", ["src/tlkit/_kernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
