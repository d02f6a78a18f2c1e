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

from __future__ import print_function, division, absolute_import

from xcafm.model import CaFM, ModelError, validate_product, ground
from xcafm.formula import parse, evaluate, TRUE
from xcafm.formula_test import ECALL, ECALL_CTX, randformula
from xcafm.generator import GenSpec, generate

import itertools
import numpy as np
from pytest import raises


FEATURES = ('eCall', 'eCallEurope', 'eCallRussia', 'GPS', 'GLONASS')

def ecall():
    return CaFM(['Location'], FEATURES, FEATURES, parse(ECALL_CTX))


def test_CaFM():
    m = ecall()
    assert m.contexts == ('Location',)
    assert m.features == FEATURES
    assert m.optional == FEATURES
    assert m.names()  == ('Location',) + FEATURES
    assert m.metadata == {}
    assert m == ecall()
    assert m != CaFM([], FEATURES, FEATURES, parse(ECALL))
    assert m != CaFM(['Location'], FEATURES, (), parse(ECALL_CTX))
    assert 'Location' in repr(m)

    # plain feature model
    fm = CaFM([], FEATURES, (), parse(ECALL))
    assert fm.contexts == ()
    assert fm.names() == FEATURES

    # model with empty formula
    m0 = CaFM([], ['f'], ['f'], TRUE)
    assert m0.formula is TRUE

    def bad(contexts, features, optional, text, match):
        with raises(ModelError, match=match):
            CaFM(contexts, features, optional, parse(text))

    bad(['c', 'c'], ['f'],       [],      "f",          'context "c" is declared twice')
    bad([],         ['f', 'f'],  [],      "f",          'feature "f" is declared twice')
    bad([],         ['f'],       ['f', 'f'], "f",       'optional feature "f" is declared twice')
    bad(['f'],      ['f'],       [],      "f",          'both context and feature')
    bad([],         ['f'],       ['g'],   "f",          'optional "g" is not a feature')
    bad(['c'],      ['f'],       [],      "c -> g",     'formula variable "g"')
    bad(['1c'],     ['f'],       [],      "f",          'invalid variable name "1c"')


def test_validate_product():
    m = ecall()
    # Location=T: product is {eCall, eCallRussia, GLONASS}
    assert validate_product(m, {'Location'}, {'eCall', 'eCallRussia', 'GLONASS'}) is True
    assert validate_product(m, {'Location'}, {'eCall', 'eCallEurope', 'GPS'}) is False
    # Location=F: product is {eCall, eCallEurope, GPS}
    assert validate_product(m, set(), {'eCall', 'eCallEurope', 'GPS'}) is True
    assert validate_product(m, set(), {'eCall', 'eCallRussia', 'GLONASS'}) is False
    assert validate_product(m, set(), set()) is False
    assert validate_product(m, set(), {'eCall', 'eCallEurope', 'GPS', 'GLONASS'}) is False

    with raises(ModelError, match='"Moon" is not a context'):
        validate_product(m, {'Moon'}, set())
    with raises(ModelError, match='"Galileo" is not a feature'):
        validate_product(m, set(), {'eCall', 'Galileo'})
    with raises(ModelError):
        validate_product(m, set(), {'Location'})


def test_ground():
    m = ecall()
    g = ground(m, {'Location'})
    assert 'Location' not in str(g)
    assert str(g).endswith("& eCallRussia")
    g = ground(m, set())
    assert str(g).endswith("& !eCallRussia")

    fm = CaFM([], FEATURES, (), parse(ECALL))
    assert ground(fm, set()) is fm.formula

    m = CaFM(['c'], ['f'], ['f'], parse("(c -> f) & (c -> !f)"))
    assert str(ground(m, set())) == "⊤"
    assert str(ground(m, {'c'})) == "f & !f"

    with raises(ModelError):
        ground(m, {'f'})


# subsets returns all subsets of names.
def subsets(names):
    return [set(_) for k in range(len(names)+1)
                   for _ in itertools.combinations(names, k)]

# validate_product agrees with evaluation of grounded formula for every
# context assignment and every product.
def test_validate_ground():
    rng = np.random.default_rng(8)
    mv = []
    for i in range(40):
        mv.append(generate(GenSpec(n_features=int(rng.integers(3, 6)),
                                   n_contexts=int(rng.integers(0, 4)),
                                   ratio=float(rng.uniform(0.5, 4)), seed=i)))
    for i in range(40):
        contexts = ['c%d' % j for j in range(int(rng.integers(0, 4)))]
        features = ['f%d' % j for j in range(int(rng.integers(1, 5)))]
        phi = randformula(rng, contexts + features, 4)
        mv.append(CaFM(contexts, features, (), phi))

    for m in mv:
        for d in subsets(m.contexts):
            g = ground(m, d)
            for p in subsets(m.features):
                a = {f: (f in p) for f in m.features}
                assert validate_product(m, d, p) == evaluate(g, a), \
                        (str(m.formula), sorted(d), sorted(p))
