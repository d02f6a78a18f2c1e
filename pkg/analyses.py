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
"""Package analyses detects anomalies in Context-aware Feature Models.

The following anomalies are detected:

- voidness          some context assignment admits no valid product.
- dead feature      feature that is not selected in any valid product of any context.
- false optional    optional feature that is selected in every valid product of every context.
- redundancy        conjunct of the formula implied by the other conjuncts.

Every analysis is provided with several approaches:

- iterative         repeated incremental SAT checks with push/pop.
- pruning           SAT models guide elimination of features that cannot be
                    anomalous; the complete anomaly set comes out at once.
                    Applies to dead and false-optional analyses only.
- forall            one ∃∀ query solved by package qbf.
- oracle            brute-force enumeration of all assignments; small models only.

Use analyze to run an analysis with an approach by name and portfolio to
race several approaches and take the first one that completes. Every run
returns Report.

Feature analyses stop at the first anomaly found by default
(stop_mode=STOP_FIRST). With STOP_ALL every anomaly is reported.
"""

from __future__ import print_function, division, absolute_import

from xcafm import formula
from xcafm.formula import Var, Not, And, Or, Implies, conj, disj
from xcafm.sat import Solver
from xcafm import qbf

import numpy as np
from golang import context, sync, time
from golang.gcompat import qq

import logging
log = logging.getLogger('xcafm.analyses')


KINDS      = ('voidness', 'dead', 'false-optional', 'features', 'redundancy')
APPROACHES = ('iterative', 'forall', 'pruning', 'oracle')

STOP_FIRST = 'first'    # stop as soon as one anomaly is found
STOP_ALL   = 'all'      # find all anomalies

# oracle refuses models with more variables than this.
ORACLE_CAP = 22


# AnalysisError is raised when an analysis is asked for something it cannot do.
class AnalysisError(ValueError): pass

# OracleCapError is raised when a model is too big for the oracle.
class OracleCapError(AnalysisError): pass


# Report is the result of one analysis run.
class Report:
    # .kind             analysis kind, see KINDS
    # .approach         approach used, or 'portfolio'
    # .winner           approach that won portfolio race, or None
    # .stop_mode        STOP_FIRST | STOP_ALL
    # .void             bool | None                 voidness
    # .witness          voidness: tuple of contexts set to true in a void context
    #                   forall feature analyses: the first anomalous feature
    # .dead             tuple of dead features | None if not analyzed
    # .false_optional   tuple of false-optional features | None if not analyzed
    # .redundant        tuple of redundant candidates | None; a candidate is
    #                   index of conjunct or text of checked formula
    # .trace            iterative voidness: context assignments of every checked leaf
    # .incomplete       True if the run was canceled or timed out
    # .wall_time        seconds spent in the analysis
    # .stats            {} 'sat_calls', 'refinement_count' -> int

    def __init__(r, kind, approach, stop_mode=STOP_FIRST):
        r.kind           = kind
        r.approach       = approach
        r.winner         = None
        r.stop_mode      = stop_mode
        r.void           = None
        r.witness        = None
        r.dead           = None
        r.false_optional = None
        r.redundant      = None
        r.trace          = None
        r.incomplete     = False
        r.wall_time      = 0.
        r.stats          = {'sat_calls': 0, 'refinement_count': 0}

    def __repr__(r):
        return '<Report %s/%s: %s>' % (r.kind, r.approach, r.verdict())

    # anomaly_found returns whether the run found an anomaly.
    def anomaly_found(r):
        return bool(r.void or r.dead or r.false_optional or r.redundant)

    # verdict returns short textual verdict of the run.
    #
    # Verdicts of complete runs with different approaches are equal.
    # Combined feature analysis reports dead before false-optional.
    def verdict(r):
        if r.incomplete:
            return 'incomplete'
        if r.kind == 'voidness':
            return 'void' if r.void else 'not-void'
        if r.kind == 'redundancy':
            return 'redundant' if r.redundant else 'not-redundant'
        if r.dead:
            return 'dead'
        if r.false_optional:
            return 'false-optional'
        return 'no-anomaly'

    # to_dict returns JSON-serializable representation of the report.
    def to_dict(r):
        d = {
            'kind':       r.kind,
            'approach':   r.approach,
            'stop_mode':  r.stop_mode,
            'verdict':    r.verdict(),
            'incomplete': r.incomplete,
            'wall_time':  r.wall_time,
            'stats':      dict(r.stats),
        }
        if r.winner is not None:
            d['winner'] = r.winner
        if r.kind == 'voidness':
            d['void'] = r.void
        for field in ('witness', 'dead', 'false_optional', 'redundant', 'trace'):
            v = getattr(r, field)
            if v is None:
                continue
            if field == 'trace':
                v = [list(_) for _ in v]
            elif isinstance(v, tuple):
                v = list(v)
            d[field] = v
        return d


# _run runs body(ctx, r) and accounts its wall time.
#
# When ctx is done in the middle, whatever body managed to put into r is
# returned with r.incomplete=True.
def _run(ctx, r, body):
    t0 = time.now()
    try:
        body(ctx, r)
    except Exception:
        if ctx.err() is None:
            raise
        r.incomplete = True
    r.wall_time = time.now() - t0
    log.info('%s/%s: %s in %.3fs (%d SAT calls, %d refinements)',
             r.kind, r.approach, r.verdict(), r.wall_time,
             r.stats['sat_calls'], r.stats['refinement_count'])
    return r

def _solver(m, seed):
    s = Solver(seed)
    s.declare(m.contexts + m.features)
    return s

def _check(ctx, s, r):
    r.stats['sat_calls'] += 1
    v = s.check_sat(ctx)
    log.debug('%s/%s: SAT call #%d: %s', r.kind, r.approach, r.stats['sat_calls'],
              'sat' if v else 'unsat')
    return v

def _qbf(ctx, r, problem, seed, max_refinements):
    return qbf.solve_exists_forall(ctx, problem, seed=seed, max_refinements=max_refinements,
                                   stats=r.stats)

def _check_stop_mode(stop_mode):
    if stop_mode not in (STOP_FIRST, STOP_ALL):
        raise AnalysisError('invalid stop mode %s' % qq(stop_mode))


# only_one returns formula that is true iff exactly one of vars is true.
#
#   (x1 | ... | xn) & ⋀_{i<j} (!xi | !xj)
def only_one(vars):
    vars = list(vars)
    if not vars:
        raise AnalysisError('only_one: empty variable list')
    if len(set(vars)) != len(vars):
        raise AnalysisError('only_one: duplicate variables')
    fv = [disj([Var(x) for x in vars])]
    for i in range(len(vars)):
        for j in range(i+1, len(vars)):
            fv.append(Or(Not(Var(vars[i])), Not(Var(vars[j]))))
    return conj(fv)

# aux_names returns {} feature -> name of its fresh auxiliary variable.
#
# Auxiliary names do not collide with any of taken.
def aux_names(features, taken):
    taken = set(taken)
    auxmap = {}
    for f in features:
        name = 'aux_' + f
        while name in taken:
            name = '_' + name
        taken.add(name)
        auxmap[f] = name
    return auxmap


# ---- voidness ----

# voidness_iterative checks voidness by enumerating context assignments.
#
# Contexts are fixed one by one in declaration order, first to true and
# then to false, and the formula is checked for satisfiability at every
# leaf. The first unsatisfiable leaf proves the model void.
def voidness_iterative(ctx, m, seed=0):
    r = Report('voidness', 'iterative')
    def body(ctx, r):
        s = _solver(m, seed)
        s.push(m.formula)
        r.trace = []
        cs = m.contexts

        def check(i, truthy):
            if i == len(cs):
                r.trace.append(tuple(truthy))
                if not _check(ctx, s, r):
                    r.void    = True
                    r.witness = tuple(truthy)
                    return True
                return False
            c = cs[i]
            s.push(Var(c))
            found = check(i+1, truthy + [c])
            s.pop()
            if found:
                return True
            s.push(Not(Var(c)))
            found = check(i+1, truthy)
            s.pop()
            return found

        if not check(0, []):
            r.void = False
    return _run(ctx, r, body)


# voidness_forall checks voidness by solving ∃C.∀F.¬φ.
def voidness_forall(ctx, m, seed=0, max_refinements=None):
    r = Report('voidness', 'forall')
    def body(ctx, r):
        p = qbf.ExistsForallProblem(m.contexts, m.features, Not(m.formula))
        v = _qbf(ctx, r, p, seed, max_refinements)
        if v:
            r.void    = True
            r.witness = tuple(c for c in m.contexts if v.witness[c])
        else:
            r.void    = False
    return _run(ctx, r, body)


# ---- dead features ----

# _dead_iterative finds dead features by checking them one by one.
#
# Features selected in a found model are not dead and are not checked.
# Found models are appended to models.
def _dead_iterative(ctx, r, m, stop_mode, seed, models):
    s = _solver(m, seed)
    s.push(m.formula)
    r.dead = ()
    fs = list(m.features)
    while fs:
        f = fs.pop(0)
        s.push(Var(f))
        if not _check(ctx, s, r):
            r.dead += (f,)
            if stop_mode == STOP_FIRST:
                s.pop()
                break
        else:
            model = s.get_model()
            models.append(model)
            fs = [_ for _ in fs if _ not in model]
        s.pop()

# _dead_pruning finds dead features by asking for a model selecting any
# feature not yet seen selected.
def _dead_pruning(ctx, r, m, seed, models):
    s = _solver(m, seed)
    s.push(m.formula)
    fs = list(m.features)
    while fs:
        s.push(disj([Var(f) for f in fs]))
        if not _check(ctx, s, r):
            r.dead = tuple(fs)     # none of fs can be selected
            return
        model = s.get_model()
        models.append(model)
        fs = [f for f in fs if f not in model]
        s.pop()
    r.dead = ()

# _dead_forall finds dead features via
#
#   ∃aux. OnlyOne(aux) ∧ ∀C.∀F. (⋀ aux(f) → f) → ¬φ
#
# In STOP_ALL mode the query is repeated with found features blocked.
def _dead_forall(ctx, r, m, stop_mode, seed, max_refinements):
    _anomaly_forall(ctx, r, m, 'dead', m.features, True, stop_mode, seed, max_refinements)

def _anomaly_forall(ctx, r, m, field, features, polarity, stop_mode, seed, max_refinements):
    setattr(r, field, ())
    if not features:
        return
    auxmap = aux_names(features, m.names())
    auxv = [auxmap[f] for f in features]
    selected = conj([Implies(Var(auxmap[f]), Var(f) if polarity else Not(Var(f)))
                     for f in features])
    found = []
    while len(found) < len(features):
        blocked = [Not(Var(auxmap[f])) for f in found]
        matrix = conj([only_one(auxv)] + blocked + [Implies(selected, Not(m.formula))])
        p = qbf.ExistsForallProblem(auxv, m.contexts + m.features, matrix)
        v = _qbf(ctx, r, p, seed, max_refinements)
        if not v:
            break
        f = [_ for _ in features if v.witness[auxmap[_]]][0]
        found.append(f)
        setattr(r, field, tuple(found))
        if r.witness is None:
            r.witness = f
        if stop_mode == STOP_FIRST:
            break

def dead_features_iterative(ctx, m, stop_mode=STOP_FIRST, seed=0):
    _check_stop_mode(stop_mode)
    r = Report('dead', 'iterative', stop_mode)
    return _run(ctx, r, lambda ctx, r: _dead_iterative(ctx, r, m, stop_mode, seed, []))

def dead_features_pruning(ctx, m, seed=0):
    r = Report('dead', 'pruning', STOP_ALL)
    return _run(ctx, r, lambda ctx, r: _dead_pruning(ctx, r, m, seed, []))

def dead_features_forall(ctx, m, stop_mode=STOP_FIRST, seed=0, max_refinements=None):
    _check_stop_mode(stop_mode)
    r = Report('dead', 'forall', stop_mode)
    return _run(ctx, r, lambda ctx, r: _dead_forall(ctx, r, m, stop_mode, seed, max_refinements))


# ---- false optional features ----

# _fo_iterative finds false-optional features by checking them one by one.
#
# Optional features deselected in a found model are not false optional and
# are not checked. exempt gives features already known to be deselectable.
def _fo_iterative(ctx, r, m, stop_mode, seed, exempt):
    r.false_optional = ()
    if not m.optional:
        return
    exempt = set(exempt)
    s = _solver(m, seed)
    s.push(m.formula)
    for f in m.optional:
        if f in exempt:
            continue
        s.push(Not(Var(f)))
        if not _check(ctx, s, r):
            r.false_optional += (f,)
            if stop_mode == STOP_FIRST:
                s.pop()
                break
        else:
            model = s.get_model()
            exempt.update(_ for _ in m.optional if _ not in model)
        s.pop()

# _fo_pruning finds false-optional features by asking for a model
# deselecting any optional feature not yet seen deselected.
def _fo_pruning(ctx, r, m, seed, exempt):
    fs = [f for f in m.optional if f not in set(exempt)]
    if not fs:
        r.false_optional = ()
        return
    s = _solver(m, seed)
    s.push(m.formula)
    while fs:
        s.push(disj([Not(Var(f)) for f in fs]))
        if not _check(ctx, s, r):
            r.false_optional = tuple(fs)
            return
        model = s.get_model()
        fs = [f for f in fs if f in model]
        s.pop()
    r.false_optional = ()

# _fo_forall finds false-optional features via
#
#   ∃aux. OnlyOne(aux) ∧ ∀C.∀F. (⋀ aux(f) → ¬f) → ¬φ
def _fo_forall(ctx, r, m, stop_mode, seed, max_refinements):
    _anomaly_forall(ctx, r, m, 'false_optional', m.optional, False, stop_mode, seed, max_refinements)

def false_optional_iterative(ctx, m, stop_mode=STOP_FIRST, seed=0, exempt=()):
    _check_stop_mode(stop_mode)
    r = Report('false-optional', 'iterative', stop_mode)
    return _run(ctx, r, lambda ctx, r: _fo_iterative(ctx, r, m, stop_mode, seed, exempt))

def false_optional_pruning(ctx, m, seed=0):
    r = Report('false-optional', 'pruning', STOP_ALL)
    return _run(ctx, r, lambda ctx, r: _fo_pruning(ctx, r, m, seed, ()))

def false_optional_forall(ctx, m, stop_mode=STOP_FIRST, seed=0, max_refinements=None):
    _check_stop_mode(stop_mode)
    r = Report('false-optional', 'forall', stop_mode)
    return _run(ctx, r, lambda ctx, r: _fo_forall(ctx, r, m, stop_mode, seed, max_refinements))


# feature_analysis runs dead-feature analysis and then false-optional analysis.
#
# Optional features deselected in models found while looking for dead
# features are not checked for being false optional. In STOP_FIRST mode
# false-optional features are not searched when a dead feature is found.
def feature_analysis(ctx, m, approach, stop_mode=STOP_FIRST, seed=0, max_refinements=None):
    _check_stop_mode(stop_mode)
    if approach == 'pruning':
        stop_mode = STOP_ALL
    r = Report('features', approach, stop_mode)
    def body(ctx, r):
        models = []
        if approach == 'iterative':
            _dead_iterative(ctx, r, m, stop_mode, seed, models)
        elif approach == 'pruning':
            _dead_pruning(ctx, r, m, seed, models)
        elif approach == 'forall':
            _dead_forall(ctx, r, m, stop_mode, seed, max_refinements)
        else:
            raise AnalysisError('feature analysis: unknown approach %s' % qq(approach))
        if r.dead and stop_mode == STOP_FIRST:
            return
        exempt = set()
        for model in models:
            exempt.update(f for f in m.optional if f not in model)
        if approach == 'iterative':
            _fo_iterative(ctx, r, m, stop_mode, seed, exempt)
        elif approach == 'pruning':
            _fo_pruning(ctx, r, m, seed, exempt)
        else:
            _fo_forall(ctx, r, m, stop_mode, seed, max_refinements)
    return _run(ctx, r, body)


# ---- redundancy ----

def _split(m, index):
    if type(m.formula) is not And:
        raise AnalysisError('redundancy: formula is not a conjunction')
    cv = formula.conjuncts(m.formula)
    if not (0 <= index < len(cv)):
        raise AnalysisError('redundancy: candidate index %d out of range [0, %d)' % (index, len(cv)))
    return cv[index], conj(cv[:index] + cv[index+1:])

# _entailed returns whether rest ⊨ candidate.
def _entailed(ctx, r, m, rest, candidate, seed):
    s = _solver(m, seed)
    s.push(rest)
    s.push(Not(candidate))
    return not _check(ctx, s, r)

# redundancy_check checks whether conjunct #index of the formula is implied
# by the other conjuncts.
def redundancy_check(ctx, m, index, seed=0):
    candidate, rest = _split(m, index)
    r = Report('redundancy', 'iterative')
    def body(ctx, r):
        r.redundant = (index,) if _entailed(ctx, r, m, rest, candidate, seed) else ()
    return _run(ctx, r, body)

# entails checks whether the formula of m implies candidate.
def entails(ctx, m, candidate, seed=0):
    names = set(m.names())
    for v in formula.varlist(candidate):
        if v not in names:
            raise AnalysisError('candidate variable %s is neither context nor feature' % qq(v))
    r = Report('redundancy', 'iterative')
    def body(ctx, r):
        r.redundant = (str(candidate),) if _entailed(ctx, r, m, m.formula, candidate, seed) else ()
    return _run(ctx, r, body)

# redundancy_all checks every top-level conjunct for redundancy.
def redundancy_all(ctx, m, seed=0):
    cv = formula.conjuncts(m.formula)
    r = Report('redundancy', 'iterative', STOP_ALL)
    def body(ctx, r):
        r.redundant = ()
        for i, c in enumerate(cv):
            if _entailed(ctx, r, m, conj(cv[:i] + cv[i+1:]), c, seed):
                r.redundant += (i,)
    return _run(ctx, r, body)


# ---- oracle ----

# oracle computes ground truth for all analyses by enumerating every
# assignment of contexts and features.
#
# The returned report has kind 'oracle' and all of void, witness, dead,
# false_optional and redundant (indices of conjuncts) filled. The void
# witness is the one iterative voidness finds first.
def oracle(m, cap=ORACLE_CAP):
    names = m.contexts + m.features
    n = len(names)
    if n > cap:
        raise OracleCapError('oracle: model has %d variables > cap %d' % (n, cap))
    nc = len(m.contexts)
    nf = len(m.features)

    t0 = time.now()
    # contexts come first, so rows of reshape(2^nc, 2^nf) are context assignments
    column = assignment_columns(names)

    cv = formula.conjuncts(m.formula)
    valid   = np.ones(2**n, dtype=bool)
    nfalse  = np.zeros(2**n, dtype=np.int32)
    for c in cv:
        v = evaluate_all(c, column, 2**n)
        valid  &= v
        nfalse += ~v

    r = Report('oracle', 'oracle', STOP_ALL)
    bycontext = valid.reshape(2**nc, 2**nf).any(axis=1)
    voidrows  = np.flatnonzero(~bycontext)
    r.void = bool(len(voidrows))
    if r.void:
        # true-first enumeration visits context rows in descending order
        row = int(voidrows[-1])
        r.witness = tuple(c for j, c in enumerate(m.contexts) if (row >> (nc-1-j)) & 1)

    r.dead = tuple(f for f in m.features if not (valid & column[f]).any())
    r.false_optional = tuple(f for f in m.optional if not (valid & ~column[f]).any())

    # conjunct is redundant iff it is never the only false one
    alone = (nfalse == 1)
    redundant = []
    for i, c in enumerate(cv):
        if not (alone & ~evaluate_all(c, column, 2**n)).any():
            redundant.append(i)
    r.redundant = tuple(redundant)
    r.wall_time = time.now() - t0
    return r

# assignment_columns returns {} name -> value of the variable in every
# assignment of names.
#
# Assignment #k gives variable #j value of bit n-1-j of k.
def assignment_columns(names):
    n = len(names)
    k = np.arange(2**n, dtype=np.int64)
    column = {}
    for j, name in enumerate(names):
        column[name] = ((k >> (n-1-j)) & 1).astype(bool)
    return column

# evaluate_all evaluates f over all assignments at once.
#
# column is {} name -> bool array of variable values, as returned by
# assignment_columns, and size is the length of the arrays.
def evaluate_all(f, column, size):
    value = {}
    for node in formula.postorder(f):
        t = type(node)
        if t is Var:
            v = column[node.name]
        elif t is formula.Const:
            v = np.full(size, node.value, dtype=bool)
        elif t is Not:
            v = ~value[id(node.child)]
        else:
            l = value[id(node.left)]
            g = value[id(node.right)]
            if t is And:
                v = l & g
            elif t is Or:
                v = l | g
            else:
                v = ~l | g
        value[id(node)] = v
    return value[id(f)]

# truth_table returns value of f in every assignment of names.
def truth_table(f, names):
    return evaluate_all(f, assignment_columns(names), 2**len(names))

# _oracle_report projects oracle record onto one analysis kind.
def _oracle_report(ctx, m, kind, stop_mode, index, candidate):
    if candidate is not None:
        raise AnalysisError('oracle does not check arbitrary candidates')
    if kind == 'redundancy' and index is not None:
        _split(m, index)
    r = Report(kind, 'oracle', stop_mode)
    def body(ctx, r):
        o = oracle(m)
        if kind == 'voidness':
            r.void    = o.void
            r.witness = o.witness
        if kind in ('dead', 'features'):
            r.dead = o.dead
        if kind in ('false-optional', 'features'):
            r.false_optional = o.false_optional
        if kind == 'redundancy':
            if index is None:
                r.redundant = o.redundant
            else:
                r.redundant = (index,) if index in o.redundant else ()
    return _run(ctx, r, body)


# ---- dispatch ----

# applicable_approaches returns approaches that can run analysis kind.
def applicable_approaches(kind):
    if kind == 'voidness':
        return ('iterative', 'forall', 'oracle')
    if kind == 'redundancy':
        return ('iterative', 'oracle')
    return APPROACHES

def normkind(kind):
    if kind == 'all-features':
        kind = 'features'
    if kind not in KINDS:
        raise AnalysisError('unknown analysis %s' % qq(kind))
    return kind

# analyze runs analysis kind on m with approach.
#
# approach can also be 'portfolio'. For redundancy analysis index selects
# the conjunct to check and candidate an arbitrary formula to check for
# being implied; without both every conjunct is checked.
def analyze(ctx, m, kind, approach, stop_mode=STOP_FIRST, seed=0,
            index=None, candidate=None, max_refinements=None):
    kind = normkind(kind)
    _check_stop_mode(stop_mode)
    if approach == 'portfolio':
        return portfolio(ctx, m, kind, stop_mode=stop_mode, seed=seed,
                         index=index, candidate=candidate, max_refinements=max_refinements)
    if approach not in applicable_approaches(kind):
        raise AnalysisError('approach %s does not apply to %s analysis' % (qq(approach), kind))

    if approach == 'oracle':
        return _oracle_report(ctx, m, kind, stop_mode, index, candidate)

    if kind == 'voidness':
        if approach == 'iterative':
            return voidness_iterative(ctx, m, seed=seed)
        return voidness_forall(ctx, m, seed=seed, max_refinements=max_refinements)

    if kind == 'dead':
        if approach == 'iterative':
            return dead_features_iterative(ctx, m, stop_mode, seed=seed)
        if approach == 'pruning':
            return dead_features_pruning(ctx, m, seed=seed)
        return dead_features_forall(ctx, m, stop_mode, seed=seed, max_refinements=max_refinements)

    if kind == 'false-optional':
        if approach == 'iterative':
            return false_optional_iterative(ctx, m, stop_mode, seed=seed)
        if approach == 'pruning':
            return false_optional_pruning(ctx, m, seed=seed)
        return false_optional_forall(ctx, m, stop_mode, seed=seed, max_refinements=max_refinements)

    if kind == 'features':
        return feature_analysis(ctx, m, approach, stop_mode, seed=seed, max_refinements=max_refinements)

    # redundancy
    if candidate is not None:
        return entails(ctx, m, candidate, seed=seed)
    if index is not None:
        return redundancy_check(ctx, m, index, seed=seed)
    return redundancy_all(ctx, m, seed=seed)


# portfolio races approaches on analysis kind and returns report of the
# first one that completes. The others are canceled.
#
# approaches defaults to every SAT-based approach applicable to kind.
def portfolio(ctx, m, kind, stop_mode=STOP_FIRST, seed=0, approaches=None,
              index=None, candidate=None, max_refinements=None):
    kind = normkind(kind)
    if approaches is None:
        approaches = [_ for _ in applicable_approaches(kind) if _ != 'oracle']

    t0 = time.now()
    pctx, cancel = context.with_cancel(ctx)
    mu = sync.Mutex()
    done = []   # [] of first complete report
    errv = []

    def run(wctx, approach):
        try:
            r = analyze(wctx, m, kind, approach, stop_mode=stop_mode, seed=seed,
                        index=index, candidate=candidate, max_refinements=max_refinements)
        except Exception as e:
            if wctx.err() is not None:
                return
            log.exception('portfolio: %s/%s failed:', kind, approach)
            with mu:
                errv.append(e)
            return
        if r.incomplete:
            return
        with mu:
            if not done:
                done.append(r)
                cancel()

    wg = sync.WorkGroup(pctx)
    for approach in approaches:
        wg.go(run, approach)
    try:
        wg.wait()
    finally:
        cancel()

    if done:
        r = done[0]
        r.winner   = r.approach
        r.approach = 'portfolio'
    elif errv:
        raise errv[0]
    else:
        r = Report(kind, 'portfolio', stop_mode)
        r.incomplete = True
    r.wall_time = time.now() - t0
    log.info('%s/portfolio: %s won in %.3fs', kind, r.winner, r.wall_time)
    return r
