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

from xcafm.qbf import ExistsForallProblem, solve_exists_forall, ResourceLimit
from xcafm.formula import parse, Not, substitute, TRUE
from xcafm.analyses import truth_table
from xcafm.formula_test import ECALL_CTX, randformula

import numpy as np
from golang import context
from pytest import raises


bg = context.background()

def solve(X, Y, text, **kw):
    return solve_exists_forall(bg, ExistsForallProblem(X, Y, parse(text)), **kw)


def test_examples():
    v = solve(['x'], ['y'], "x | y")
    assert v
    assert v.witness == {'x': True}

    v = solve(['x'], ['y'], "x & y")
    assert not v
    assert v.witness is None
    assert v.refinement_count >= 1

    v = solve(['x'], ['y'], "x -> y")
    assert v.witness == {'x': False}

    # x must equal y for every y: impossible
    v = solve(['x'], ['y'], "(x -> y) & (y -> x)")
    assert not v
    assert v.refinement_count <= 2

    v = solve(['a', 'b'], ['y'], "(a | y) & (b | !y) & !(a & b & y)")
    assert not v

    # nothing universal: plain satisfiability
    v = solve(['a', 'b'], [], "a & !b")
    assert v.witness == {'a': True, 'b': False}
    assert v.refinement_count == 1     # the first candidate is an unconstrained guess
    assert v.sat_calls == 4

    # nothing existential: validity
    assert solve([], ['y'], "y | !y")
    assert not solve([], ['y'], "y")

    # void context of eCall with Location: there is none
    p = ExistsForallProblem(['Location'], ['eCall', 'eCallEurope', 'eCallRussia', 'GPS', 'GLONASS'],
                            Not(parse(ECALL_CTX)))
    assert not solve_exists_forall(bg, p)


def test_problem_error():
    with raises(ValueError, match='both'):
        ExistsForallProblem(['x'], ['x'], parse("x"))
    with raises(ValueError, match='"z" is not quantified'):
        ExistsForallProblem(['x'], ['y'], parse("x | z"))
    p = ExistsForallProblem(('x',), ('y',), TRUE)
    assert p.exists_vars == ('x',)
    assert p.forall_vars == ('y',)


def test_resource_limit():
    stats = {}
    with raises(ResourceLimit):
        solve(['x'], ['y'], "x & y", max_refinements=0, stats=stats)
    assert stats == {'sat_calls': 2, 'refinement_count': 1}
    assert not solve(['x'], ['y'], "x & y", max_refinements=10)


def test_ctx():
    ctx, cancel = context.with_cancel(bg)
    cancel()
    p = ExistsForallProblem(['x'], ['y'], parse("x | y"))
    with raises(Exception):
        solve_exists_forall(ctx, p)


# random problems agree with brute force.
def test_random():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        nx = int(rng.integers(0, 6))
        ny = int(rng.integers(1, 6))
        X = ['x%d' % i for i in range(nx)]
        Y = ['y%d' % i for i in range(ny)]
        matrix = randformula(rng, X + Y, 5)
        table = truth_table(matrix, X + Y).reshape(2**nx, 2**ny)
        expect = bool(table.all(axis=1).any())

        v = solve_exists_forall(bg, ExistsForallProblem(X, Y, matrix), seed=int(rng.integers(100)))
        assert bool(v) == expect, str(matrix)
        assert v.refinement_count <= min(2**nx, 2**ny)
        if v:
            assert set(v.witness) == set(X)
            g = substitute(matrix, v.witness)
            assert truth_table(g, Y).all(), (str(matrix), v.witness)
