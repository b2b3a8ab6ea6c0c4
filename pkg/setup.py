"""Build script: compiles the optional speedup extension.

The package works without the compiled kernels (a numpy fallback is selected
at import time), so any compiler failure here downgrades to a warning instead
of aborting the install.  Set QUANDLEFORGE_NO_EXT=1 to skip compilation.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext as _build_ext
from setuptools.extension import Extension

ext_modules = []
if not os.environ.get("QUANDLEFORGE_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "quandleforge._kernels._speedups",
                    ["src/quandleforge/_kernels/_speedups.pyx"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        print("quandleforge: Cython not available, building without speedups",
              file=sys.stderr)


class optional_build_ext(_build_ext):
    """build_ext that tolerates a missing or broken C toolchain."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"quandleforge: speedup extension failed to build ({exc}); "
              "the pure-Python kernels will be used", file=sys.stderr)


setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
