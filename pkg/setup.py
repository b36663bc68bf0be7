from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "sepcodes._ckernels",
        ["src/sepcodes/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3", "embedsignature": True},
    )
)
