from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install: the package falls back to _kernels_py at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("odious._kernels", ["src/odious/_kernels.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
