"""
Setup configuration for palper
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="palper",
    version="1.0.0",
    description="Palindromic periodicities of words: predicates, sequence censuses, exhaustive searches and an MkDocs plugin",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(include=["palper", "palper.*"]),
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.0"]},
    entry_points={
        "console_scripts": [
            "palper = palper.cli:main",
        ],
        "mkdocs.plugins": [
            "palper = palper.plugin:PalperPlugin",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
