"""Optional compiled core.

The Cython extension is built when Cython and a C compiler are available;
otherwise the package installs pure-Python and falls back at import.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SPACEGRAPH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("spacegraph._ckernels",
                       ["src/spacegraph/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
