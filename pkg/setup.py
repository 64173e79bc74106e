from setuptools import setup, find_packages

# --- Helper function to read requirements ---
def parse_requirements(filename):
    """Load requirements from a pip requirements file."""
    with open(filename, 'r', encoding='utf-8') as f:
        lineiter = (line.strip() for line in f)
        return [line for line in lineiter if line and not line.startswith('#')]

# --- Project Metadata ---
NAME = "forest_complex"
VERSION = "0.1.0"
DESCRIPTION = "Degree-bounded forest complexes of graphs: construction, integral homology and closed-form verification."
PYTHON_REQUIRES = ">=3.10"  # int.bit_count

# --- Find Packages ---
# Imports are written `from src.x import y`, so `src` itself is the top-level package.
packages = find_packages(include=["src", "src.*"])

# --- Get Dependencies ---
install_requires = parse_requirements("requirements.txt")
tests_require = parse_requirements("requirements-dev.txt")


# --- Setup Configuration ---
setup(
    name=NAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=open("README.md", "r", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    python_requires=PYTHON_REQUIRES,
    packages=packages,
    py_modules=["forest_complex_cli"],
    install_requires=install_requires,
    extras_require={"dev": tests_require},
    # Budget files and suite manifests ship with the package
    package_data={"src.config": ["budgets/*.yaml", "suites/*.yaml"]},
    include_package_data=True,
    license="MIT",
    entry_points={
        "console_scripts": [
            "forest-complex=forest_complex_cli:main",
        ]
    },
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
