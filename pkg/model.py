# -*- coding: utf-8 -*-
# Copyright (C) 2026  Nexedi SA and Contributors.
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
"""Package model provides Context-aware Feature Models.

- use CaFM to represent a model: contexts, features, optional features and
  the formula constraining them. A plain feature model is a CaFM without
  contexts.
- use validate_product to check whether a product is valid in a context
  assignment.
- use ground to fix contexts of a model to constants.
"""

from __future__ import print_function, division, absolute_import

from xcafm import formula

from golang.gcompat import qq


# ModelError is raised when a model, product or context assignment is not
# consistent.
class ModelError(ValueError): pass


# CaFM represents Context-aware Feature Model.
class CaFM:
    # .contexts     tuple of context names
    # .features     tuple of feature names
    # .optional     tuple of features marked optional
    # .formula      Formula over contexts and features
    # .metadata     {} free-form information, e.g. how the model was generated
    #
    # names keep declaration order. The order defines the order in which
    # analyses go through contexts and features.

    def __init__(m, contexts, features, optional, phi, metadata=None):
        m.contexts = tuple(contexts)
        m.features = tuple(features)
        m.optional = tuple(optional)
        m.formula  = phi
        m.metadata = dict(metadata or {})

        def bad(msg):
            raise ModelError(msg)
        for kind, namev in (('context', m.contexts), ('feature', m.features),
                            ('optional feature', m.optional)):
            if len(set(namev)) != len(namev):
                dup = [_ for _ in namev if namev.count(_) > 1][0]
                bad('%s %s is declared twice' % (kind, qq(dup)))
        for name in m.contexts + m.features:
            if not formula.valid_name(name):
                bad('invalid variable name %s' % qq(name))
        cset = set(m.contexts)
        fset = set(m.features)
        for c in m.contexts:
            if c in fset:
                bad('%s is both context and feature' % qq(c))
        for f in m.optional:
            if f not in fset:
                bad('optional %s is not a feature' % qq(f))
        for v in formula.varlist(m.formula):
            if v not in cset and v not in fset:
                bad('formula variable %s is neither context nor feature' % qq(v))

    def __eq__(m, n):
        if not isinstance(n, CaFM):
            return False
        return (m.contexts == n.contexts and m.features == n.features and
                m.optional == n.optional and m.formula  == n.formula  and
                m.metadata == n.metadata)
    def __ne__(m, n):
        return not (m == n)
    __hash__ = None

    def __repr__(m):
        return 'CaFM(contexts=%r, features=%r, optional=%r, formula=%s)' % (
                    list(m.contexts), list(m.features), list(m.optional), qq(str(m.formula)))

    # names returns all variable names of the model: contexts, then features.
    def names(m):
        return m.contexts + m.features


# _check_subset verifies that all names from subset are in universe.
def _check_subset(subset, universe, what):
    uset = set(universe)
    for x in sorted(subset):
        if x not in uset:
            raise ModelError('%s is not a %s of the model' % (qq(x), what))


# validate_product returns whether product p (set of selected features) is
# valid in context assignment d (set of contexts set to true).
#
# Contexts not in d and features not in p are false.
def validate_product(m, d, p):
    _check_subset(d, m.contexts, 'context')
    _check_subset(p, m.features, 'feature')
    d = set(d)
    p = set(p)
    a = {}
    for c in m.contexts:
        a[c] = (c in d)
    for f in m.features:
        a[f] = (f in p)
    return formula.evaluate(m.formula, a)


# ground returns formula of m with contexts fixed according to d.
#
# The result mentions only features. It may be a truth constant if the
# whole formula folds.
def ground(m, d):
    _check_subset(d, m.contexts, 'context')
    if not m.contexts:
        return m.formula
    d = set(d)
    values = {c: (c in d) for c in m.contexts}
    return formula.substitute(m.formula, values)
