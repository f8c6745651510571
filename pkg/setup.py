from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "oscqsl._jacobi_cy",
        ["src/oscqsl/_jacobi_cy.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
