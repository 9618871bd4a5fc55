from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("treekit._ckernels", ["src/treekit/_ckernels.pyx"], optional=True)],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # no Cython: the package runs on the pure-Python kernels
    extensions = []

setup(ext_modules=extensions)
