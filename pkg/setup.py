"""Build script: compiles the optional row-reduction kernel.

The package works without the extension (a pure-Python backend is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("zkmassey._core", ["src/zkmassey/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"zkmassey: skipping compiled kernel ({exc}); pure-Python backend will be used")

setup(ext_modules=ext_modules)
