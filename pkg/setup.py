import os

from setuptools import Extension, setup

# The section-audit kernel is optional: set TRAVERSALS_PURE=1 to skip the
# compiled extension and run on the pure-Python fallback.
ext_modules = []
if not os.environ.get("TRAVERSALS_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("traversals._sections", ["src/traversals/_sections.pyx"])],
            language_level=3,
            annotate=False,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
