from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/count.cpp",
    "src/partition.cpp",
    "src/gap_poset.cpp",
    "src/sc_core.cpp",
    "src/lattice_paths.cpp",
    "src/theorems.cpp",
    "src/io.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "simcores._simcores",
            sources=["python/bindings.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            libraries=["gmpxx", "gmp"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
