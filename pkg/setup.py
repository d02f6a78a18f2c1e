# XCAFM pythonic package setup
# Copyright (C) 2014 - 2026  Nexedi SA and Contributors.
#
# This program is free software: you can Use, Study, Modify and Redistribute
# it under the terms of the GNU General Public License version 3, or (at your
# option) any later version, as published by the Free Software Foundation.
#
# You can also Link and Combine this program with other software covered by
# the terms of any of the Free Software licenses or any of the Open Source
# Initiative approved licenses and Convey the resulting work. Corresponding
# source of such a combination shall include the source code for all other
# software used.
#
# This program is distributed WITHOUT ANY WARRANTY; without even the implied
# warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
# See COPYING file for full licensing terms.
# See https://www.nexedi.com/licensing for rationale and options.

from __future__ import print_function, division, absolute_import

from setuptools import setup, find_packages
from setuptools.command.build_py import build_py as _build_py


# build_py that
# - does not install in-tree xcafm.py & setup.py
# - synthesizes xcafm/__init__.py on install
class build_py(_build_py):

    def find_package_modules(self, package, package_dir):
        modules = _build_py.find_package_modules(self, package, package_dir)
        for m in (('xcafm', 'xcafm', 'xcafm.py'),
                  ('xcafm', 'setup', 'setup.py')):
            if m in modules:
                modules.remove(m)
        return modules

    def build_packages(self):
        _build_py.build_packages(self)
        self.initfile = self.get_module_outfile(self.build_lib, ('xcafm',), '__init__')
        with open(self.initfile, 'w') as f:
            f.write("# xcafm package (autogenerated)\n")

    def get_outputs(self, include_bytecode=1):
        outputs = _build_py.get_outputs(self, include_bytecode)

        # list synthesized __init__.py, so that `pip uninstall` removes it
        self.initfile = self.get_module_outfile(self.build_lib, ('xcafm',), '__init__')
        outputs.append(self.initfile)
        if include_bytecode:
            if self.compile:
                outputs.append(self.initfile + 'c')
            if self.optimize:
                outputs.append(self.initfile + 'o')

        return outputs


# read file content
def readfile(path):
    with open(path, 'r') as f:
        return f.read()


setup(
    name        = 'xcafm',
    version     = '0.0.0.dev1',
    description = 'Anomaly detection for context-aware feature models',
    long_description = '%s\n----\n\n%s' % (
                            readfile('README.rst'), readfile('CHANGELOG.rst')),
    license     = 'GPLv3+ with wide exception for Open-Source',

    keywords    = 'feature model product line SAT QBF CEGAR',

    package_dir = {'xcafm': ''},
    packages    = ['xcafm'] + ['xcafm.%s' % _ for _ in
                        find_packages(exclude=['examples', 'examples.*'])],
    package_data = {'xcafm': ['testdata/*.json']},
    install_requires = [
                   'pygolang',
                   'numpy',
                  ],

    extras_require = {
                   'test': ['pytest'],
    },

    cmdclass    = {'build_py':      build_py,
                  },

    entry_points= {'console_scripts': [
                        'xcafm      = xcafm.cli.xcafm:main',
                      ]
                  },

    classifiers = [_.strip() for _ in """\
        Development Status :: 2 - Alpha
        Programming Language :: Python
        Programming Language :: Python :: 3
        Programming Language :: Python :: 3.9
        Programming Language :: Python :: 3.10
        Programming Language :: Python :: 3.11
        Intended Audience :: Developers
        Intended Audience :: Science/Research
        Topic :: Scientific/Engineering
        Operating System :: POSIX :: Linux\
    """.splitlines()]
)
