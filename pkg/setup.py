from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("ctkit.sim._kernels", ["src/ctkit/sim/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython available: install pure-Python only; the kernel shim falls
    # back to the numpy implementation at import time.
    ext_modules = []

if __name__ == "__main__":
    setup(ext_modules=ext_modules)
