import sys

from setuptools import Extension, setup


def extensions():
    # The compiled kernels are optional: without Cython or a C++ toolchain the
    # package installs with the pure-Python fallback selected at import.
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("cliqueperc: Cython not available, building without compiled kernels",
              file=sys.stderr)
        return []
    ext = Extension(
        "cliqueperc._kernels",
        ["src/cliqueperc/_kernels.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
