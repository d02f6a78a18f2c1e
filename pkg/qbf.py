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
"""Package qbf decides ∃X.∀Y.ψ formulas.

solve_exists_forall runs counterexample-guided abstraction refinement over
two incremental SAT solvers:

    abstraction     over X, proposes candidate x*
    counterexample  holds ¬ψ and looks for y* with ¬ψ[x*, y*]

If there is no y*, x* is the witness. Otherwise ψ[Y:=y*] is added to the
abstraction, which rules out every candidate that y* refutes. When the
abstraction becomes unsatisfiable the formula is false.
"""

from __future__ import print_function, division, absolute_import

from xcafm import formula
from xcafm.formula import Var, Not
from xcafm.sat import Solver

from golang.gcompat import qq

import logging
log = logging.getLogger('xcafm.qbf')


# ResourceLimit is raised when solving exceeds its refinement budget.
class ResourceLimit(RuntimeError): pass


# ExistsForallProblem represents ∃X.∀Y.ψ.
class ExistsForallProblem:
    # .exists_vars  tuple of names (X)
    # .forall_vars  tuple of names (Y)
    # .matrix       Formula ψ over X ∪ Y

    def __init__(p, exists_vars, forall_vars, matrix):
        p.exists_vars = tuple(exists_vars)
        p.forall_vars = tuple(forall_vars)
        p.matrix      = matrix

        xset = set(p.exists_vars)
        yset = set(p.forall_vars)
        for v in p.exists_vars:
            if v in yset:
                raise ValueError('variable %s is quantified both ∃ and ∀' % qq(v))
        for v in formula.varlist(matrix):
            if v not in xset and v not in yset:
                raise ValueError('matrix variable %s is not quantified' % qq(v))


# QbfVerdict is result of solve_exists_forall.
class QbfVerdict:
    # .witness              {} x -> bool if the formula is true, None otherwise
    # .refinement_count     number of abstraction refinements performed
    # .sat_calls            number of SAT checks issued on both solvers

    def __init__(v, witness, refinement_count, sat_calls):
        v.witness          = witness
        v.refinement_count = refinement_count
        v.sat_calls        = sat_calls

    def __bool__(v):
        return v.witness is not None
    __nonzero__ = __bool__

    def __repr__(v):
        if v.witness is None:
            return 'QbfVerdict(Unsat, refinements=%d)' % v.refinement_count
        return 'QbfVerdict(Sat %s, refinements=%d)' % (
                sorted(x for x, val in v.witness.items() if val), v.refinement_count)


# solve_exists_forall decides ∃X.∀Y.ψ of problem p.
#
# The solving is aborted with ctx.err() when ctx is done, and with
# ResourceLimit after max_refinements refinements if that is not None.
#
# If stats is given, its 'sat_calls' and 'refinement_count' entries are
# incremented while solving goes on, and so are kept on abort as well.
def solve_exists_forall(ctx, p, seed=0, max_refinements=None, stats=None):
    if stats is None:
        stats = {}
    stats.setdefault('sat_calls', 0)
    stats.setdefault('refinement_count', 0)
    X = p.exists_vars
    Y = p.forall_vars

    abstraction = Solver(seed)
    abstraction.declare(X)
    counter = Solver(seed)
    counter.declare(X + Y)
    counter.push(Not(p.matrix))

    nrefine = 0
    ncalls  = 0
    tried   = set()
    while True:
        ncalls += 1
        stats['sat_calls'] += 1
        if not abstraction.check_sat(ctx):
            log.debug('∃∀: abstraction exhausted after %d refinements', nrefine)
            return QbfVerdict(None, nrefine, ncalls)
        xtrue = abstraction.get_model()
        xstar = {x: (x in xtrue) for x in X}
        key = frozenset(xtrue)
        assert key not in tried, 'candidate %s proposed twice' % sorted(xtrue)
        tried.add(key)

        counter.push(formula.conj([Var(x) if xstar[x] else Not(Var(x)) for x in X]))
        ncalls += 1
        stats['sat_calls'] += 1
        cex = counter.check_sat(ctx)
        if not cex:
            counter.pop()
            log.debug('∃∀: witness %s after %d refinements', sorted(xtrue), nrefine)
            return QbfVerdict(xstar, nrefine, ncalls)
        ytrue = counter.get_model()
        counter.pop()

        ystar = {y: (y in ytrue) for y in Y}
        abstraction.push(formula.substitute(p.matrix, ystar))
        nrefine += 1
        stats['refinement_count'] += 1
        log.debug('∃∀: refinement #%d: candidate %s refuted by %s',
                  nrefine, sorted(xtrue), sorted(y for y in Y if ystar[y]))
        if max_refinements is not None and nrefine > max_refinements:
            raise ResourceLimit('∃∀: exceeded %d refinements' % max_refinements)
