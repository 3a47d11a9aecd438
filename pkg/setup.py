"""Build script: compiles the optional fast kernel extension.

The package is fully functional without the extension (a pure numpy
fallback is selected at import time); the build therefore skips the
extension when Cython is unavailable instead of failing.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "groupcodes._fastkern",
                ["src/groupcodes/_fastkern.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
