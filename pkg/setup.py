from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/cbgraph/_kernel.pyx"], language_level=3
    )
except ImportError:
    # The pure-Python kernel is selected at import time when the
    # compiled twin is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
