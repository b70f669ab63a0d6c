from setuptools import Extension, setup

# The compiled kernels are optional: if Cython (or a C compiler) is missing
# the package installs anyway and falls back to the pure-Python kernels.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "secdom._core",
                ["src/secdom/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
