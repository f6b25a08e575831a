from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "morsegraph.kernels._ckernels",
        ["src/morsegraph/kernels/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
