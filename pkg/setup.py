"""Build script for the optional compiled kernel core.

The package works without the extension (a pure-Python twin of every kernel
is selected at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tgcnn.kernels.cy_kernels",
                ["src/tgcnn/kernels/cy_kernels.pyx"],
                # no -ffast-math: the compiled kernels must stay bit-identical
                # to the pure-Python reference loops
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
