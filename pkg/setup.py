"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
kernel twin is selected at import time), so any failure here downgrades
to a warning instead of aborting the install.
"""
from __future__ import annotations

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(
                f"warning: skipping C extension build ({exc}); "
                "the pure-Python kernel will be used",
                file=sys.stderr,
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(
                f"warning: failed to build {ext.name} ({exc}); "
                "the pure-Python kernel will be used",
                file=sys.stderr,
            )


def _ext_modules():
    if not os.path.exists("src/kempe/_kernel/_fast.pyx"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    extensions = [
        Extension("kempe._kernel._fast", ["src/kempe/_kernel/_fast.pyx"]),
    ]
    return cythonize(extensions, compiler_directives={"language_level": "3"})


setup(ext_modules=_ext_modules(), cmdclass={"build_ext": _OptionalBuildExt})
