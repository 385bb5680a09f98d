import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("AMPLIFY_PURE_BUILD"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("amplify._speedups", ["src/amplify/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
