from setuptools import Extension, setup

# The compiled kernels are an optional speedup: if Cython (or a compiler)
# is unavailable the package installs without them and triblock.kernels
# falls back to the pure-Python implementation at import time.
try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "triblock._kernels_cy",
                ["src/triblock/_kernels_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
