"""Build script: compiles the optional Cython kernel module.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure here downgrades to a pure-Python install
instead of aborting.
"""

from setuptools import setup


def extension_modules():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "stepgraphon._kernels._native",
        sources=["src/stepgraphon/_kernels/_native.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


try:
    setup(ext_modules=extension_modules())
except SystemExit:
    setup(ext_modules=[])
