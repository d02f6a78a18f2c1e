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
"""Package sat provides incremental SAT solver with a stack of formulas.

Use Solver to push formulas, check satisfiability of their conjunction,
retrieve the model and pop formulas back:

    s = Solver()
    s.push(parse('a | b'))
    s.push(parse('!a'))
    if s.check_sat(ctx):
        s.get_model()       # -> {'b'}
    s.pop()

The solver is CDCL with two watched literals, first-UIP learning, VSIDS
decision heuristic, phase saving and Luby restarts.

Every pushed formula is converted to clauses by formula.to_cnf and each
clause is guarded by activation literal of its level: clause C pushed at
level k is stored as C ∨ ¬a_k. check_sat decides all active a_k first.
pop permanently asserts ¬a_k which disables all clauses of the level,
including learned clauses that depended on them.
"""

from __future__ import print_function, division, absolute_import

from xcafm import formula

import heapq
import numpy as np

import logging
log = logging.getLogger('xcafm.sat')


# restart unit: search restarts after luby(i)·RESTART_BASE conflicts.
RESTART_BASE = 100

# VSIDS activity decay.
VAR_DECAY = 0.95

# ctx is polled every CTX_POLL conflicts+decisions.
CTX_POLL = 256


# StackError is raised by pop when no formula is on the stack.
class StackError(RuntimeError): pass

# NoModelError is raised by get_model when there is no model to return.
class NoModelError(RuntimeError): pass


# Sat is verdict of satisfiable check.
class Sat:
    # .model    frozenset of names of variables assigned true
    def __init__(v, model):
        v.model = model
    def __bool__(v):
        return True
    __nonzero__ = __bool__
    def __repr__(v):
        return 'Sat(%s)' % sorted(v.model)

# Unsat is verdict of unsatisfiable check.
class Unsat:
    def __bool__(v):
        return False
    __nonzero__ = __bool__
    def __repr__(v):
        return 'Unsat'

UNSAT = Unsat()


# Solver is incremental SAT solver.
#
# Solver must be used by only one thread at a time.
class Solver:
    # .var_map      {} name -> var     (append-only)
    # .stats        {} counter -> int
    #
    # ._nvars       number of allocated variables; variables are 1.._nvars
    # ._value       [var] -> 1 | -1 | 0(unassigned)
    # ._level       [var] -> decision level of assignment
    # ._reason      [var] -> clause that implied the assignment | None
    # ._phase       [var] -> last assigned polarity
    # ._activity    [var] -> VSIDS activity
    # ._heap        [] of (-activity, var) with lazy deletion
    # ._watches     {} lit -> [] of clauses watching lit
    # ._trail       [] of assigned literals in assignment order
    # ._trail_lim   [] of trail positions where each decision level starts
    # ._qhead       trail position of the next literal to propagate
    # ._levels      [] of (activation var, [] of clauses) for pushed formulas
    # ._ok          False if clauses are unsatisfiable regardless of the stack
    # ._model       frozenset of true names after Sat | None

    def __init__(s, seed=0):
        s.var_map   = {}
        s.stats     = {'checks': 0, 'conflicts': 0, 'decisions': 0,
                       'propagations': 0, 'restarts': 0, 'learned': 0}
        s._rng      = np.random.default_rng(seed)
        s._nvars    = 0
        s._value    = [0]
        s._level    = [0]
        s._reason   = [None]
        s._phase    = [False]
        s._activity = [0.]
        s._heap     = []
        s._var_inc  = 1.
        s._watches  = {}
        s._trail    = []
        s._trail_lim = []
        s._qhead    = 0
        s._levels   = []
        s._ok       = True
        s._model    = None

    # nlevels returns number of formulas on the stack.
    def nlevels(s):
        return len(s._levels)

    # declare maps names to solver variables without constraining them.
    #
    # Models returned after Sat are total over all mapped names.
    def declare(s, names):
        for name in names:
            if name not in s.var_map:
                s.var_map[name] = s._newvar()
        s._model = None

    # push converts f to clauses and activates them as a new stack level.
    def push(s, f):
        enc = formula.to_cnf(f, s.var_map, top=s._nvars)
        while s._nvars < enc.top:
            s._newvar()
        for name, v in enc.var_map.items():
            if name not in s.var_map:
                s.var_map[name] = v
        a = s._newvar()
        s._levels.append((a, enc.clauses))
        for c in enc.clauses:
            s._addclause(list(c) + [-a])
        s._model = None

    # pop deactivates clauses of the most recent push.
    def pop(s):
        if not s._levels:
            raise StackError('pop: no formula on the stack')
        a, _ = s._levels.pop()
        s._addclause([-a])
        s._model = None

    # check_sat checks whether conjunction of all formulas on the stack is
    # satisfiable.
    #
    # It returns Sat with model over all mapped names, or UNSAT.
    # If ctx is given the search is aborted with ctx.err() when ctx is done.
    def check_sat(s, ctx=None):
        s.stats['checks'] += 1
        s._model = None
        if ctx is not None and ctx.err() is not None:
            raise ctx.err()
        if not s._ok:
            return UNSAT
        assumptions = [a for a, _ in s._levels]
        try:
            nrestart = 0
            while True:
                ok = s._search(ctx, assumptions, _luby(nrestart) * RESTART_BASE)
                if ok is not None:
                    break
                nrestart += 1
                s.stats['restarts'] += 1
            if not ok:
                return UNSAT
            value = s._value
            s._model = frozenset(name for name, v in s.var_map.items() if value[v] == 1)
            return Sat(s._model)
        finally:
            s._cancel_until(0)

    # get_model returns names of variables assigned true by the last
    # satisfiable check.
    def get_model(s):
        if s._model is None:
            raise NoModelError('get_model: no model (last check was not Sat, or the stack changed since)')
        return set(s._model)

    # write_dimacs writes active clauses in DIMACS CNF format to out.
    #
    # Activation literals are stripped. Learned clauses are not written.
    # Names of original variables are emitted as `c var <id> <name>` comments.
    def write_dimacs(s, out):
        clausev = []
        for _, cv in s._levels:
            clausev.extend(cv)
        for name, v in sorted(s.var_map.items(), key=lambda _: _[1]):
            out.write('c var %d %s\n' % (v, name))
        out.write('p cnf %d %d\n' % (s._nvars, len(clausev)))
        for c in clausev:
            out.write(' '.join(str(l) for l in c) + ' 0\n')


    # ---- internals ----

    def _newvar(s):
        s._nvars += 1
        v = s._nvars
        s._value.append(0)
        s._level.append(0)
        s._reason.append(None)
        s._phase.append(False)
        # tiny seeded jitter breaks ties in between fresh variables
        s._activity.append(float(s._rng.random()) * 1e-6)
        s._watches[v]  = []
        s._watches[-v] = []
        heapq.heappush(s._heap, (-s._activity[v], v))
        return v

    def _litvalue(s, l):
        x = s._value[l if l > 0 else -l]
        return x if l > 0 else -x

    def _decision_level(s):
        return len(s._trail_lim)

    def _enqueue(s, l, reason):
        v = l if l > 0 else -l
        s._value[v]  = 1 if l > 0 else -1
        s._level[v]  = len(s._trail_lim)
        s._reason[v] = reason
        s._trail.append(l)

    # _addclause adds clause at decision level 0.
    def _addclause(s, c):
        assert s._decision_level() == 0
        if not s._ok:
            return
        litv = []
        for l in c:
            x = s._litvalue(l)
            if x == 1:
                return      # satisfied forever
            if x == 0 and l not in litv:
                litv.append(l)
        if len(litv) == 0:
            s._ok = False
            return
        if len(litv) == 1:
            s._enqueue(litv[0], None)
            if s._propagate() is not None:
                s._ok = False
            return
        s._watches[litv[0]].append(litv)
        s._watches[litv[1]].append(litv)

    # _propagate performs unit propagation of all enqueued literals.
    #
    # It returns conflicting clause, or None.
    # For every clause c its watched literals are c[0] and c[1], and the
    # literal a clause implies is always put to c[0].
    def _propagate(s):
        trail   = s._trail
        watches = s._watches
        value   = s._value
        stats   = s.stats
        while s._qhead < len(trail):
            p = trail[s._qhead]
            s._qhead += 1
            stats['propagations'] += 1
            false_lit = -p
            wv = watches[false_lit]
            keep = []
            for i, c in enumerate(wv):
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fx = value[first] if first > 0 else -value[-first]
                if fx == 1:
                    keep.append(c)
                    continue
                # look for new literal to watch
                for k in range(2, len(c)):
                    l = c[k]
                    lx = value[l] if l > 0 else -value[-l]
                    if lx != -1:
                        c[1], c[k] = l, false_lit
                        watches[l].append(c)
                        break
                else:
                    keep.append(c)
                    if fx == -1:
                        keep.extend(wv[i+1:])
                        watches[false_lit] = keep
                        s._qhead = len(trail)
                        return c
                    s._enqueue(first, c)
                    continue
            watches[false_lit] = keep
        return None

    # _analyze derives first-UIP clause from conflict.
    #
    # It returns (learned clause, backtrack level). The asserting literal
    # is learned[0], and the literal with the highest remaining level is
    # learned[1].
    def _analyze(s, confl):
        level  = s._level
        reason = s._reason
        trail  = s._trail
        dl     = s._decision_level()
        seen   = set()
        learnt = [None]
        counter = 0
        p = None
        i = len(trail) - 1
        c = confl
        while True:
            for q in (c if p is None else c[1:]):
                v = q if q > 0 else -q
                if v not in seen and level[v] > 0:
                    seen.add(v)
                    s._bump(v)
                    if level[v] >= dl:
                        counter += 1
                    else:
                        learnt.append(q)
            while True:
                v = trail[i] if trail[i] > 0 else -trail[i]
                if v in seen:
                    break
                i -= 1
            p = trail[i]
            i -= 1
            v = p if p > 0 else -p
            seen.discard(v)
            counter -= 1
            if counter == 0:
                break
            c = reason[v]
        learnt[0] = -p

        if len(learnt) == 1:
            return learnt, 0
        imax = 1
        for k in range(2, len(learnt)):
            if level[abs(learnt[k])] > level[abs(learnt[imax])]:
                imax = k
        learnt[1], learnt[imax] = learnt[imax], learnt[1]
        return learnt, level[abs(learnt[1])]

    def _bump(s, v):
        s._activity[v] += s._var_inc
        if s._activity[v] > 1e100:
            s._activity = [a * 1e-100 for a in s._activity]
            s._var_inc *= 1e-100
            s._rebuild_heap()

    def _rebuild_heap(s):
        s._heap = [(-s._activity[v], v) for v in range(1, s._nvars+1) if s._value[v] == 0]
        heapq.heapify(s._heap)

    def _cancel_until(s, lvl):
        if s._decision_level() <= lvl:
            return
        start = s._trail_lim[lvl]
        for l in reversed(s._trail[start:]):
            v = l if l > 0 else -l
            s._phase[v]  = (l > 0)
            s._value[v]  = 0
            s._reason[v] = None
            heapq.heappush(s._heap, (-s._activity[v], v))
        del s._trail[start:]
        del s._trail_lim[lvl:]
        s._qhead = len(s._trail)

    # _pick_branch returns next decision literal, or None if all variables
    # are assigned.
    def _pick_branch(s):
        heap = s._heap
        while heap:
            _, v = heapq.heappop(heap)
            if s._value[v] == 0:
                return v if s._phase[v] else -v
        return None

    # _search runs CDCL until model, conflict with assumptions or until
    # nconflict_max conflicts.
    #
    # It returns True (Sat), False (Unsat) or None (restart).
    def _search(s, ctx, assumptions, nconflict_max):
        stats = s.stats
        nconflict = 0
        npoll = 0
        while True:
            npoll += 1
            if ctx is not None and npoll % CTX_POLL == 0:
                if ctx.err() is not None:
                    raise ctx.err()

            confl = s._propagate()
            if confl is not None:
                stats['conflicts'] += 1
                nconflict += 1
                if s._decision_level() == 0:
                    s._ok = False
                    return False
                learnt, btlevel = s._analyze(confl)
                s._cancel_until(btlevel)
                if len(learnt) == 1:
                    s._enqueue(learnt[0], None)
                else:
                    s._watches[learnt[0]].append(learnt)
                    s._watches[learnt[1]].append(learnt)
                    stats['learned'] += 1
                    s._enqueue(learnt[0], learnt)
                s._var_inc /= VAR_DECAY
                continue

            if nconflict >= nconflict_max:
                s._cancel_until(0)
                return None

            nextlit = None
            while s._decision_level() < len(assumptions):
                a = assumptions[s._decision_level()]
                x = s._litvalue(a)
                if x == 1:
                    s._trail_lim.append(len(s._trail))   # dummy level
                elif x == -1:
                    return False
                else:
                    nextlit = a
                    break
            if nextlit is None:
                nextlit = s._pick_branch()
                if nextlit is None:
                    return True
            stats['decisions'] += 1
            s._trail_lim.append(len(s._trail))
            s._enqueue(nextlit, None)


# _luby returns i-th element of Luby sequence 1 1 2 1 1 2 4 1 1 2 ...
def _luby(i):
    size, seq = 1, 0
    while size < i+1:
        seq  += 1
        size  = 2*size + 1
    while size-1 != i:
        size = (size-1) >> 1
        seq -= 1
        i = i % size
    return 2**seq
