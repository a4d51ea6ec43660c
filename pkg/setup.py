import os

from setuptools import Extension, setup

# The census kernel is an optional accelerator; the package falls back to the
# pure-Python twin (axiomlab._census_py) when the extension is absent.
ext_modules = []
if not os.environ.get("AXIOMLAB_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "axiomlab._census_core",
                    ["src/axiomlab/_census_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
