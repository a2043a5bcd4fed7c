from setuptools import find_packages, setup


def get_version():
    variables = {}
    with open("src/cghkit/__init__.py", "r") as f:
        for line in f:
            if line.startswith("__version__"):
                exec(line, variables)
    return variables["__version__"]


setup(
    name="cghkit",
    version=get_version(),
    description="exact extremal search, constructions and inequality checks for convex geometric hypergraphs",
    author="cghkit contributors",
    license="Apache",
    package_dir={"": "src"},
    packages=find_packages("src"),
    python_requires=">=3.9.0",
    install_requires=["numpy>=1.21"],
    extras_require={"tests": ["pytest>=7", "hypothesis>=6"]},
    entry_points={"console_scripts": ["cghkit=cghkit.cli.main:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
)
