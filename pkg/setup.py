"""Build the optional compiled kernel.

The extension is marked optional: if Cython or a C compiler is missing, the
install still succeeds and the package falls back to the pure-Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fittutor._kernel._speedups",
                sources=["src/fittutor/_kernel/_speedups.pyx"],
                extra_compile_args=["-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
