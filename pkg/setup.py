"""Build script.

The package is pure Python; a Cython twin of the arithmetic kernel is
compiled when Cython and a C compiler are available.  Set KNWZNW_NO_EXT=1
to skip the extension entirely; the pure kernel is always installed and
is selected automatically at import time when the extension is missing.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the kernel extension, but never fail the install over it."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # compiler missing, etc.
            print("warning: kernel extension not built (%s); "
                  "falling back to the pure-Python kernel" % exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print("warning: %s not built (%s)" % (ext.name, exc))


ext_modules = []
if os.environ.get("KNWZNW_NO_EXT", "") not in ("1", "true", "yes"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("knwznw._kernel._fast", ["src/knwznw/_kernel/_fast.pyx"])],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
