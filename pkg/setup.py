import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("YTAB_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "ytab._kernels._ckern",
                    ["src/ytab/_kernels/_ckern.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install with the pure Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
