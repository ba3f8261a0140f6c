import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "phantomprob.kernels._kernels",
    ["src/phantomprob/kernels/_kernels.pyx"],
    include_dirs=[np.get_include()],
)

setup(ext_modules=cythonize([ext]))
