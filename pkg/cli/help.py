# -*- coding: utf-8 -*-
# xcafm - help topics
# Copyright (C) 2022-2026  Nexedi SA and Contributors.
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

from collections import OrderedDict

# topic_name -> (topic_summary, topic_help)
topic_dict = OrderedDict()

help_formula = """\
Formulas are written with the following operators, from the tightest to the
loosest binding:

    !a          not
    a & b       and         left-associative
    a | b       or          left-associative
    a -> b      implies     right-associative: a -> b -> c is a -> (b -> c)

Parentheses group subformulas. Variable names start with a letter or
underscore followed by letters, digits or underscores. Whitespace, including
newlines, is ignored.

For example

    eCall & (eCall -> GPS | GLONASS) & !(GPS & GLONASS)
"""

help_cafm = """\
Context-aware feature models are stored as JSON documents of the following
form:

    {
      "contexts": ["Location"],
      "features": ["eCall", "GPS", "GLONASS"],
      "optional": ["GPS", "GLONASS"],
      "formula":  "eCall & (eCall -> GPS | GLONASS)",
      "metadata": {}
    }

contexts and features must not overlap, optional features must be features
and the formula may mention only contexts and features (see 'xcafm help
formula'). Empty formula is the empty conjunction which is always true.
"optional" and "metadata" can be omitted.

A plain feature model is a model without contexts.
"""

help_approaches = """\
Every analysis can be run with several approaches:

    iterative   calls SAT solver repeatedly, pushing and popping constraints
                on its stack. For voidness every context assignment is tried.
    pruning     lets models found by SAT solver rule out features that cannot
                be anomalous, and returns all anomalies at once.
                Applies to dead and false-optional analyses.
    forall      solves one ∃∀ query. Feature analyses use auxiliary selector
                variables constrained to exactly one being true.
    oracle      enumerates all assignments; for small models only.
    portfolio   runs the approaches above (except oracle) concurrently and
                takes the first one that finishes.

By default feature analyses stop at the first anomaly. Use --all to find all
of them. Pruning always finds all.
"""


topic_dict['formula']    = "syntax of formulas",                    help_formula
topic_dict['cafm']       = "format of model files",                 help_cafm
topic_dict['approaches'] = "approaches to run analyses with",       help_approaches
