#!/usr/bin/env python

from setuptools import setup

packge_name = "heckecells"
description = "Kazhdan-Lusztig cells and induced cell modules of Sn"
long_description = """Exact computation of Kazhdan-Lusztig polynomials, cells, cell modules and modules induced from cells of parabolic subgroups of the symmetric group, with Gelfand-Kirillov filtrations and JSON output."""

# https://pypi.org/classifiers/
classifiers = [
    'Development Status :: 3 - Alpha',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'Operating System :: MacOS :: MacOS X',
    'Operating System :: Microsoft :: Windows',
    'Operating System :: POSIX',
    'Programming Language :: Python :: 3.10',
    'Topic :: Scientific/Engineering :: Mathematics',
]

keywords = ['HECKE ALGEBRA', 'KAZHDAN-LUSZTIG', 'SYMMETRIC GROUP', 'CELLS']

# copied from requirements.txt
install_requires=[
  'cryptography>=3.0',
  'numpy>=1.22',
  'sympy>=1.10',
]

version = "0.1.0"

entry_points = {
  "console_scripts": [
    "heckecells=heckecells.__main__:main",
  ]
}
setup(name=packge_name,
      version=version,
      description=description,
      packages=[packge_name],
      long_description=long_description,
      keywords=keywords,
      classifiers=classifiers,
      install_requires=install_requires,
      python_requires=">=3.10",
      entry_points=entry_points
     )
