"""Builds the quatnum Python package by driving the CMake project.

The extension lives in the repository's CMake build (target _core); this
shim configures a Release build with only the Python module enabled and
copies the result into the wheel.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        configure = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DQUATNUM_BUILD_TESTS=OFF",
            "-DQUATNUM_BUILD_CLI=OFF",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(configure, cwd=build_dir, check=True)
        jobs = str(os.cpu_count() or 2)
        subprocess.run(["cmake", "--build", ".", "--target", "_core", "-j", jobs],
                       cwd=build_dir, check=True)

        module_dir = build_dir / "python" / "quatnum"
        for built in module_dir.glob("_core.*"):
            self.copy_file(built, out_dir / built.name)


setup(
    packages=["quatnum"],
    package_dir={"quatnum": "python/quatnum"},
    ext_modules=[CMakeExtension("quatnum._core")],
    cmdclass={"build_ext": CMakeBuild},
)
