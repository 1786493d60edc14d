"""Build the optional compiled kernels.

Without Cython or a C compiler the package still installs and falls back to
the pure-Python kernels in ``kirlie._pykernels``.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("KIRLIE_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("kirlie._ckernels", ["src/kirlie/_ckernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )

setup(ext_modules=ext_modules)
