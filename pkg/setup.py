"""Build script: compiles the optional Cython kernel.

If Cython or a C compiler is missing the install still succeeds; the
package then runs on the pure-Python kernel selected at import time.
Set ETDOM_NO_EXT=1 to skip the extension on purpose.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that degrades to the pure backend instead of failing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            print(f"etdom: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"etdom: failed to build {ext.name}; falling back to the "
                  f"pure-Python kernel ({exc})", file=sys.stderr)


ext_modules = []
if not os.environ.get("ETDOM_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "etdom._kernel._fastcore",
                    ["src/etdom/_kernel/_fastcore.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
