import os

from setuptools import Extension, setup

# The compiled kernel is an optimization, not a requirement: the package
# falls back to the pure-Python backend when the extension is absent.
# Set ORLICZ_CHAOS_NO_EXT=1 to skip building it.
ext_modules = []
if not os.environ.get("ORLICZ_CHAOS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("orlicz_chaos._kernel", ["src/orlicz_chaos/_kernel.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )

setup(ext_modules=ext_modules)
