"""Builds the optional Cython kernels; the package works without them."""
from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/lattice_count/_kernels/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )
    for ext in ext_modules:
        ext.extra_compile_args = ["-O3"]
        ext.optional = True
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
