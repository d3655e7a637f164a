import os

from setuptools import Extension, setup

# The compiled kernel only accelerates the coloring-enumeration inner loop;
# everything works on the pure-Python fallback.  TORUSLINK_PURE=1 skips the
# extension entirely (useful on hosts without a C toolchain).
ext_modules = []
if os.environ.get("TORUSLINK_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "toruslink._shadowx",
                    ["src/toruslink/_shadowx.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
