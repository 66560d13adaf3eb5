"""Build shim: compiles the pybind11 module `superlink._core` through the
project's CMake tree and drops it into the python package directory."""

import os
import subprocess

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.path.abspath(sourcedir)


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = os.path.abspath(os.path.dirname(self.get_ext_fullpath(ext.name)))
        build_temp = os.path.abspath(self.build_temp)
        os.makedirs(build_temp, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S",
                ext.sourcedir,
                "-B",
                build_temp,
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={extdir}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", build_temp, "--target", "_core", "-j4"], check=True
        )


setup(
    ext_modules=[CMakeExtension("superlink._core")],
    cmdclass={"build_ext": CMakeBuild},
)
