from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "xilab._xilab",
    sources=[
        "bindings/module.cpp",
        "src/quadrature.cpp",
        "src/theta.cpp",
        "src/xi.cpp",
        "src/fourier.cpp",
        "src/zeros.cpp",
        "src/claims.cpp",
        "src/report.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
