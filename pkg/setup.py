import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "srdist._kernels._grid_cy",
                ["src/srdist/_kernels/_grid_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    # Pure-Python install: the numpy fallback kernel is used at runtime.
    ext_modules = []

setup(ext_modules=ext_modules)
