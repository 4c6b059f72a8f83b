from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "netrobust._core",
    sources=[
        "bindings/py_module.cpp",
        "src/graph.cpp",
        "src/snap_io.cpp",
        "src/generate.cpp",
        "src/protocols.cpp",
        "src/game.cpp",
        "src/privacy.cpp",
        "src/experiment.cpp",
        "src/plot.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
