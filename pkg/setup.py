import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("DISCMINK_NO_EXTENSION", "") in ("", "0"):
    ext_modules = cythonize(
        [Extension("discmink._ckernels", ["src/discmink/_ckernels.pyx"], extra_compile_args=["-O2"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
