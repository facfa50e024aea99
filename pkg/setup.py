from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "cqclab._speedups",
                ["src/cqclab/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install the pure-Python package; the
    # kernel selection in cqclab.backend falls back automatically.
    ext_modules = []

setup(ext_modules=ext_modules)
