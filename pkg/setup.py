# Builds the optional compiled kernel extension. The package runs on the
# pure-numpy fallback if Cython (or a C compiler) is unavailable at build time.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "hyperjulia._kernels",
                ["src/hyperjulia/_kernels.pyx"],
                # -ffp-contract=off keeps the compiled arithmetic bit-identical
                # to the pure-Python/numpy fallback (no fused multiply-add).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
