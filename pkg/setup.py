"""Build script: compiles the optional Cython arithmetic kernel.

The package works without the extension (a pure-Python twin is selected at
import time), so any failure here degrades to a warning instead of aborting
the install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"warning: building the compiled kernel failed ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [Extension("crvariety._kernel_c", ["src/crvariety/_kernel_c.pyx"])],
        language_level="3",
    )
except ImportError:
    print(
        "warning: Cython not available; installing with the pure-Python kernel",
        file=sys.stderr,
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
