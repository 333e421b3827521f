"""Builds the pybind11 extension through CMake and installs the package.

Use `pip install . --no-build-isolation` (setuptools and pybind11 must be
importable).
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
        source_dir = Path(__file__).parent.resolve()
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S",
            str(source_dir),
            "-B",
            str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DQUDITCOLOR_BUILD_TESTS=OFF",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
        ]
        if "CMAKE_ARGS" in os.environ:
            configure += os.environ["CMAKE_ARGS"].split()
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "quditcolor_core", "--parallel"],
            check=True,
        )

        built = build_dir / "python" / "quditcolor" / ("_core" + sysconfig_ext_suffix())
        ext_path.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(built), str(ext_path))


def sysconfig_ext_suffix():
    import sysconfig

    return sysconfig.get_config_var("EXT_SUFFIX")


setup(
    packages=["quditcolor"],
    package_dir={"quditcolor": "python/quditcolor"},
    ext_modules=[CMakeExtension("quditcolor._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
