import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled kernels when possible; the package works without them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernels skipped ({exc}); NumPy fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); NumPy fallback will be used")


def extensions():
    if os.environ.get("DRPKIT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; compiled kernels skipped")
        return []
    ext = Extension(
        "drpkit.sim._kernels",
        ["src/drpkit/sim/_kernels.pyx"],
        # -ffp-contract=off keeps the kernel bit-identical to the NumPy fallback
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
