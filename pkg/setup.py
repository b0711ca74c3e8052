from setuptools import Extension, setup

from Cython.Build import cythonize

extensions = [
    Extension(
        "idsballs._kernels_c",
        ["src/idsballs/_kernels_c.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
