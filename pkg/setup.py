"""Build script: compiles the optional accelerator extension when possible.

The package is fully functional without the extension; a numpy fallback is
selected at import time.  Any failure here (no Cython, no C compiler) must
degrade to a pure-Python install, so the extension is attempted best-effort.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/conewalk/_heiskern.pyx",
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
    for ext in ext_modules:
        ext.include_dirs.append(numpy.get_include())
        ext.define_macros.append(("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION"))
except Exception as exc:  # pragma: no cover
    import sys

    print(f"conewalk: skipping compiled kernel ({exc!r})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
