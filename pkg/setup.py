"""Build script: compiles the optional Cython kernel extension.

If Cython or a C compiler is unavailable the install still succeeds;
klmtele._kernels then selects the pure-Python backend at import time.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "klmtele._kernels._ckernels",
                ["src/klmtele/_kernels/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError as exc:  # pragma: no cover - build-environment dependent
    print(f"klmtele: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
