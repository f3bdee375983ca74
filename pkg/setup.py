"""Build hook for the optional Cython kernels.

If Cython or a C compiler is missing the extension is skipped and the
package falls back to ``heatinv._kernels._pykernels`` at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "heatinv._kernels._ckernels",
                ["src/heatinv/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
