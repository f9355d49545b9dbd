#!/usr/bin/env python
#
# setup.py
#
# This file is part of sextica.
#
# Copyright (C) 2026 The sextica developers
#
# sextica is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# sextica is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with sextica.  If not, see <http://www.gnu.org/licenses/>.
#

from setuptools import setup

long_description = """sextica analyzes plane algebraic curves given by
polynomial equations with coefficients in towers of quadratic
extensions of the rationals: it classifies simple singularities,
enumerates flexes and conical flexes, and decides whether a sextic is
of (2,3)-torus type."""

setup (
    name = "sextica",
    version = "0.1.0",
    author = "The sextica developers",
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    description = "Exact analysis of plane curves: singularities, flexes, torus type",
    keywords = "algebraic curves singularities flexes torus sextics",
    license = "GPLv3",
    long_description = long_description,
    packages = ['sextica'],
    package_dir={'sextica': 'sextica'},
    install_requires = ['mpmath', 'numpy', 'sympy >= 1.9'],
    scripts= ['curve_analyzer.py'],
    setup_requires=['pytest-runner'],
    tests_require=['pytest'],
)
