import numpy as np
from setuptools import Extension, setup


def get_extensions():
    """Compiled fast path; the package falls back to numpy if this is absent."""
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("WARNING: Cython not available, building without the compiled core.")
        return []

    ext = Extension(
        "mkvsolve._speedups",
        sources=["src/mkvsolve/_speedups.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )


setup(ext_modules=get_extensions())
