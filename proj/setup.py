import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS").install()

ext_modules = [
    Pybind11Extension(
        "zipfheaps._core",
        sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"],
        include_dirs=["include"],
        cxx_std=20,
        define_macros=[("ZIPFHEAPS_VERSION", '"0.1.0"')],
    ),
]

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": build_ext},
)
