"""
Setup script for sgdigit.
"""
from setuptools import setup, find_packages

setup(
    name="sgdigit",
    version="0.1.0",
    description="Digit lengths in positive and negative bases, numerical monoids and b-digital semigroups",
    author="sgdigit developers",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "numpy>=1.18.0",
        "pyyaml>=5.1",
        "typer>=0.3.0",
        "rich>=10.0.0",
    ],
    extras_require={
        "test": ["pytest>=6.0", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": [
            "sgdigit=sgdigit.main:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
)
