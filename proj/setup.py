import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

eigen_include = os.environ.get("EIGEN3_INCLUDE_DIR", "/usr/include/eigen3")

ext = Pybind11Extension(
    "neit._neit",
    sources=[
        "src/params.cpp",
        "src/atom.cpp",
        "src/bloch.cpp",
        "src/analytic.cpp",
        "src/spectra.cpp",
        "src/scenario.cpp",
        "src/acceptance.cpp",
        "src/python/module.cpp",
    ],
    include_dirs=["include", "vendor", eigen_include],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
