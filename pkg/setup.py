#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import sys


try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

if sys.argv[-1] == 'publish':
    os.system('python setup.py sdist upload')
    sys.exit()

readme = open('README.rst').read()
history = open('HISTORY.rst').read().replace('.. :changelog:', '')

setup(
    name='primexp',
    version='0.1.0',
    description='Exponents of primitive Boolean matrices, extremal digraph families and a claim verification harness.',
    long_description=readme + '\n\n' + history,
    author='primexp developers',
    author_email='primexp@users.noreply.github.com',
    packages=[
        'primexp',
        'primexp.checks',
    ],
    package_dir={'primexp': 'primexp'},
    entry_points={
        'console_scripts': [
            'primexp = primexp.primexp:main'
        ]
    },
    include_package_data=True,
    install_requires=[
        'networkx>=2.6',
    ],
    extras_require={
        # pystatsd 0.1.10 cannot be built on Python 3; it is only imported
        # lazily when [statsd] enabled is set.
        'statsd': ['pystatsd==0.1.10'],
    },
    tests_require=[
        'pytest',
        'hypothesis',
    ],
    python_requires='>=3.8',
    license="BSD",
    zip_safe=False,
    keywords='primitive matrix exponent digraph girth frobenius',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
