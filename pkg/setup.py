from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "neumaier._kernels._fast",
                ["src/neumaier/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    # the package runs on the pure-Python kernels if this build fails
    for ext in ext_modules:
        ext.optional = True

setup(ext_modules=ext_modules)
