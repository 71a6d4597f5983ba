"""Build script: compiles the optional diagram-composition kernel.

The package is pure Python; the Cython extension only accelerates the hot
inner loop of algebra multiplication.  If Cython (or a C compiler) is
unavailable the build silently falls back to the pure-Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "brauer._corekernel",
                ["src/brauer/_corekernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
