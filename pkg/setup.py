import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TVPM_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tvpm._kernel", ["src/tvpm/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback kernel is selected at import time.
        pass

setup(ext_modules=ext_modules)
