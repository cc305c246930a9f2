from setuptools import find_packages, setup


def get_long_description():
    return open("README.md", "r", encoding="utf8").read()


setup(
    name="tvbundle",
    version="0.1.0",
    packages=find_packages(exclude=["tests*"]),
    license="MIT",
    description="Exact computations for irreducible toric vector bundles on P^n",
    long_description=get_long_description(),
    python_requires=">=3.8",
    install_requires=["sympy>=1.9", "typing_extensions"],
    package_data={"tvb": ["py.typed"]},
    entry_points={"console_scripts": ["tvb = tvb.cli:main"]},
    long_description_content_type="text/markdown",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
