from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/adimlab/_coverc.pyx", language_level=3, annotate=False
    )
except ImportError:
    # pure-Python fallback kernel is used when the extension is absent
    ext_modules = []

setup(ext_modules=ext_modules)
