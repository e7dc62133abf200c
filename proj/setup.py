import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.abspath(os.path.dirname(__file__))

core_sources = [
    "src/exactmath.cpp",
    "src/quasihom.cpp",
    "src/cyclicq.cpp",
    "src/wps.cpp",
    "src/orbit.cpp",
    "src/monodromy.cpp",
    "src/smoothing.cpp",
    "src/catalog.cpp",
]

ext = Pybind11Extension(
    "wqs._wqs",
    sources=["python/wqs/_wqs.cpp"] + core_sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
    define_macros=[
        # development default; deployments should set WPS_CATALOG instead
        ("WQS_DEFAULT_CATALOG", '"%s"' % os.path.join(here, "data", "catalog.json")),
    ],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
