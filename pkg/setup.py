"""Build script: compiles the optional Cython search kernel.

The package works without the extension (a pure-Python fallback is selected
at import time); any build failure here downgrades to a pure install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hajoscodes._fastcover",
                ["src/hajoscodes/_fastcover.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
