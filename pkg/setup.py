"""
matchcover
Matching covers from regularity partitions, semi-streaming matching and fully dynamic matching.
"""
from setuptools import setup

short_description = __doc__.split("\n")

version = {}
with open("matchcover/_version.py") as handle:
    exec(handle.read(), version)

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except OSError:
    long_description = "\n".join(short_description[2:])


setup(
    name='matchcover',
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version['get_versions']()['version'],
    license='LGPLv3',

    packages=['matchcover', "matchcover.tests"],

    # the small graph and script files the test suite reads
    include_package_data=True,
    package_data={'matchcover': ['data/test_data/*.txt']},

    install_requires=[
        "numpy>=1.20.0",
        "scipy>=1.5.0",
        "pandas>=1.5.0",
        "threadpoolctl>=2.2.0",
    ],

    extras_require={
        "test": ["pytest>=6.2.2", "pytest-cov>=2.11", "pytest-xdist>=2.2", "networkx>=2.6"],
    },

    entry_points={
        "console_scripts": ["matchcover = matchcover.mccli:main"],
    },

    python_requires=">=3.8",
    zip_safe=False,
)
