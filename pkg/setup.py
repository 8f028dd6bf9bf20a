#!/usr/bin/env python3

from setuptools import setup

setup(
    name="knotcomm",
    python_requires=">= 3.7",
    install_requires=[
        'sympy', 'mpmath', 'numpy',
        'toml', 'ruamel.yaml',
        'jinja2'],
    version="0.1",
    description="Certified knot invariants and obstructions to cyclic commensurability",
    license="http://www.gnu.org/licenses/gpl-3.0.html",
    packages=[
        "knotcomm",
        "knotcomm.utils",
        "knotcomm.cmd"],
    package_data={
        "knotcomm": ["templates/*.txt", "data/*.json"],
    },
    scripts=['kcomm']
)
