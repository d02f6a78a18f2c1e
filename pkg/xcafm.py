# XCAFM | Top-level in-tree python import redirector
# Copyright (C) 2014-2026  Nexedi SA and Contributors.
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

# make xcafm.* hierarchy start at the top of the working tree
#
# With this  `import xcafm.sat`  resolves to  `sat.py`
# and        `import xcafm.cli`  resolves to  `cli/__init__.py`
#
# without keeping the sources in an additional top-level xcafm/ directory.
# On install setup.py does not ship this file and synthesizes
# xcafm/__init__.py instead.
#
# see https://www.python.org/doc/essays/packages/ about __path__

from os.path import dirname, realpath
__path__ = [dirname(realpath(__file__))]
del dirname, realpath
