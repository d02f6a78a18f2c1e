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
"""Package formula provides propositional formulas over named variables.

- use Var, Not, And, Or and Implies to build formulas, parse to read them
  from text and str to print them back.
- use evaluate to compute formula value under an assignment and vars to
  retrieve the set of variables a formula mentions.
- use substitute to partially assign a formula with constant folding.
- use to_cnf to convert a formula into clausal form via Tseitin encoding.

The concrete syntax is

    !a        not
    a & b     and
    a | b     or
    a -> b    implies

with precedence `!` > `&` > `|` > `->`. `&` and `|` are left-associative and
`->` is right-associative. Parentheses override precedence. See 'xcafm help
formula' for details.

All traversals are iterative: formulas produced by the generator contain
thousands of nested conjunctions, which is far beyond python recursion limit.
"""

from __future__ import print_function, division, absolute_import

import re
from golang.gcompat import qq


# Formula is the base class for all formula nodes.
#
# Formulas are immutable values and compare structurally.
class Formula(object):
    __slots__ = ()

    def __eq__(f, g):
        return _equal(f, g)
    def __ne__(f, g):
        return not _equal(f, g)
    def __hash__(f):
        return hash(str(f))

    def __str__(f):
        return _print(f)
    def __repr__(f):
        return '%s(%s)' % (f.__class__.__name__, qq(_print(f)))


# Var represents a variable - a feature or a context.
class Var(Formula):
    __slots__ = ('name',)

    def __init__(f, name):
        if not valid_name(name):
            raise ValueError('invalid variable name %s' % qq(name))
        f.name = name

# Not represents negation.
class Not(Formula):
    __slots__ = ('child',)

    def __init__(f, child):
        f.child = child

# _Binary is the base for binary connectives.
class _Binary(Formula):
    __slots__ = ('left', 'right')

    def __init__(f, left, right):
        f.left  = left
        f.right = right

class And(_Binary):     __slots__ = ()
class Or(_Binary):      __slots__ = ()
class Implies(_Binary): __slots__ = ()

# Const represents truth constant.
#
# Constants never come from parse. They appear only as a result of
# substitution and of conj/disj over empty sequences.
class Const(Formula):
    __slots__ = ('value',)

    def __init__(f, value):
        f.value = bool(value)

TRUE  = Const(True)
FALSE = Const(False)


# ParseError is raised by parse on invalid input.
class ParseError(ValueError):
    # .line, .col   position of the offending token (1-based)
    # .token        text of the offending token ('' at end of input)
    def __init__(e, line, col, token, msg):
        super(ParseError, e).__init__('%d:%d: %s' % (line, col, msg))
        e.line  = line
        e.col   = col
        e.token = token

# EvalError is raised by evaluate when a variable is not assigned.
class EvalError(KeyError):
    def __init__(e, name):
        super(EvalError, e).__init__(name)
        e.name = name
    def __str__(e):
        return 'variable %s is not assigned' % qq(e.name)


# ---- parse / print ----

_ident_re = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')

# valid_name returns whether name can be used as variable name.
def valid_name(name):
    return _ident_re.fullmatch(name) is not None

_token_re = re.compile(r'''
      (?P<ws>     [ \t\r]+ )
    | (?P<nl>     \n )
    | (?P<ident>  [A-Za-z_][A-Za-z0-9_]* )
    | (?P<op>     -> | [!&|()] )
''', re.X)

# _tokenize splits text into [] of (kind, text, line, col).
#
# The last token is always ('eof', '', line, col).
def _tokenize(text):
    tokv = []
    pos  = 0
    line = 1
    bol  = 0    # position where current line starts
    while pos < len(text):
        m = _token_re.match(text, pos)
        col = pos - bol + 1
        if m is None:
            raise ParseError(line, col, text[pos], 'unexpected character %s' % qq(text[pos]))
        kind = m.lastgroup
        if kind == 'nl':
            line += 1
            bol = m.end()
        elif kind != 'ws':
            tokv.append((kind, m.group(), line, col))
        pos = m.end()
    tokv.append(('eof', '', line, pos - bol + 1))
    return tokv


# parse parses text in formula concrete syntax into Formula.
#
# Parsing is done with operand and operator stacks, so nesting depth of
# parentheses and negations is not limited by python recursion limit.
def parse(text):
    argv = []       # operands
    opv  = []       # pending operators: '(', '!', '&', '|' or '->'

    def reduce():
        op = opv.pop()
        if op == '!':
            argv.append(Not(argv.pop()))
            return
        r = argv.pop()
        l = argv.pop()
        argv.append(_BINOP[op](l, r))

    def unexpected(kind, tok, line, col):
        if kind == 'eof':
            raise ParseError(line, col, tok, 'unexpected end of input')
        raise ParseError(line, col, tok, 'unexpected %s' % qq(tok))

    operand = True  # whether operand is expected next
    for kind, tok, line, col in _tokenize(text):
        if operand:
            if kind == 'ident':
                argv.append(Var(tok))
                operand = False
            elif kind == 'op' and tok in ('!', '('):
                opv.append(tok)
            else:
                unexpected(kind, tok, line, col)

        elif kind == 'op' and tok in _BINOP:
            prec = _OPPREC[tok]
            while opv and opv[-1] != '(':
                top = _OPPREC[opv[-1]]
                # '->' is right-associative, '&' and '|' are left-associative
                if top < prec or (top == prec and tok == '->'):
                    break
                reduce()
            opv.append(tok)
            operand = True

        elif kind == 'op' and tok == ')'  or  kind == 'eof':
            while opv and opv[-1] != '(':
                reduce()
            if kind == 'eof':
                if opv:
                    unexpected(kind, tok, line, col)
            else:
                if not opv:
                    unexpected(kind, tok, line, col)
                opv.pop()

        else:
            unexpected(kind, tok, line, col)

    assert len(argv) == 1 and not opv
    return argv[0]

# precedence of connectives
_PREC_IMPLIES = 1
_PREC_OR      = 2
_PREC_AND     = 3
_PREC_NOT     = 4
_PREC_ATOM    = 5

def _prec(f):
    t = type(f)
    if t is Implies:    return _PREC_IMPLIES
    if t is Or:         return _PREC_OR
    if t is And:        return _PREC_AND
    if t is Not:        return _PREC_NOT
    return _PREC_ATOM

# operator token -> precedence, and binary operator token -> node type
_OPPREC = {'!': _PREC_NOT, '&': _PREC_AND, '|': _PREC_OR, '->': _PREC_IMPLIES}
_BINOP  = {'&': And, '|': Or, '->': Implies}

# _print returns text of f with minimal parentheses.
def _print(f):
    out  = []
    todo = [f]      # formulas and text pieces, processed from the end
    while todo:
        x = todo.pop()
        if type(x) is str:
            out.append(x)
            continue

        t = type(x)
        seq = []    # pieces of x in output order
        if t is Var:
            out.append(x.name)
        elif t is Const:
            out.append('⊤' if x.value else '⊥')
        elif t is Not:
            while type(x) is Not:
                out.append('!')
                x = x.child
            _piece(seq, x, _prec(x) < _PREC_NOT)
        elif t is And or t is Or:
            op = ' & ' if t is And else ' | '
            prec = _prec(x)
            rightv = []
            while type(x) is t:
                rightv.append(x.right)
                x = x.left
            _piece(seq, x, _prec(x) < prec)
            for r in reversed(rightv):
                seq.append(op)
                _piece(seq, r, _prec(r) <= prec)
        elif t is Implies:
            while type(x) is Implies:
                _piece(seq, x.left, _prec(x.left) <= _PREC_IMPLIES)
                seq.append(' -> ')
                x = x.right
            _piece(seq, x, False)
        else:
            raise TypeError('not a formula: %r' % (x,))
        todo.extend(reversed(seq))
    return ''.join(out)

def _piece(seq, f, paren):
    if paren:
        seq.extend(('(', f, ')'))
    else:
        seq.append(f)

# ---- traversal ----

def _children(f):
    t = type(f)
    if t is Not:
        return (f.child,)
    if t is And or t is Or or t is Implies:
        return (f.left, f.right)
    return ()

# postorder yields nodes of f children-first, left to right.
# Shared subtrees are yielded only once.
def postorder(f):
    done  = set()
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded:
            done.add(id(node))
            yield node
            continue
        stack.append((node, True))
        for c in reversed(_children(node)):
            if id(c) not in done:
                stack.append((c, False))

def _equal(f, g):
    stack = [(f, g)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        t = type(a)
        if t is not type(b):
            return False
        if t is Var:
            if a.name != b.name:
                return False
        elif t is Const:
            if a.value != b.value:
                return False
        else:
            stack.extend(zip(_children(a), _children(b)))
    return True


# varlist returns names of variables in f in order of their first appearance.
def varlist(f):
    seen  = set()
    namev = []
    stack = [f]
    while stack:
        node = stack.pop()
        if type(node) is Var:
            if node.name not in seen:
                seen.add(node.name)
                namev.append(node.name)
        else:
            stack.extend(reversed(_children(node)))
    return namev

# vars returns set of variable names that f mentions.
def vars(f):
    return set(varlist(f))


# evaluate computes value of f under assignment a: {} name -> bool.
#
# Every variable of f must be present in a.
def evaluate(f, a):
    value = {}
    for node in postorder(f):
        t = type(node)
        if t is Var:
            try:
                v = a[node.name]
            except KeyError:
                raise EvalError(node.name)
            v = bool(v)
        elif t is Const:
            v = node.value
        elif t is Not:
            v = not value[id(node.child)]
        else:
            l = value[id(node.left)]
            r = value[id(node.right)]
            if t is And:
                v = l and r
            elif t is Or:
                v = l or r
            else:
                v = (not l) or r
        value[id(node)] = v
    return value[id(f)]


# substitute returns f with variables from values: {} name -> bool replaced
# by truth constants, and the result simplified by constant folding.
#
# Subtrees not affected by substitution are shared with f.
def substitute(f, values):
    res = {}
    for node in postorder(f):
        t = type(node)
        if t is Var:
            v = values.get(node.name)
            r = node if v is None else (TRUE if v else FALSE)
        elif t is Const:
            r = node
        elif t is Not:
            c = res[id(node.child)]
            if type(c) is Const:
                r = FALSE if c.value else TRUE
            else:
                r = node if c is node.child else Not(c)
        else:
            l = res[id(node.left)]
            g = res[id(node.right)]
            r = _fold(t, l, g)
            if r is None:
                r = node if (l is node.left and g is node.right) else t(l, g)
        res[id(node)] = r
    return res[id(f)]

# _fold simplifies binary node t(l, r) with at least one constant operand.
# it returns None if nothing could be folded.
def _fold(t, l, r):
    lc = type(l) is Const
    rc = type(r) is Const
    if not (lc or rc):
        return None
    if t is And:
        if lc:
            return r if l.value else FALSE
        return l if r.value else FALSE
    if t is Or:
        if lc:
            return TRUE if l.value else r
        return TRUE if r.value else l
    # Implies
    if lc:
        return r if l.value else TRUE
    if r.value:
        return TRUE
    return Not(l)


# conj returns conjunction of formulas in fv folded to the left.
# conj([]) is TRUE.
def conj(fv):
    f = None
    for g in fv:
        f = g if f is None else And(f, g)
    return TRUE if f is None else f

# disj returns disjunction of formulas in fv folded to the left.
# disj([]) is FALSE.
def disj(fv):
    f = None
    for g in fv:
        f = g if f is None else Or(f, g)
    return FALSE if f is None else f

# conjuncts returns top-level conjuncts of f, left to right.
def conjuncts(f):
    return _flatten(f, And)

def _flatten(f, t):
    outv  = []
    stack = [f]
    while stack:
        node = stack.pop()
        if type(node) is t:
            stack.append(node.right)
            stack.append(node.left)
        else:
            outv.append(node)
    return outv


# ---- CNF ----

# CnfEncoding is the result of to_cnf.
class CnfEncoding:
    # .clauses      [] of tuple of nonzero int literals (-v = not v)
    # .var_map      {} name -> id for original variables
    # .aux_range    range of ids of Tseitin variables
    # .top          largest id in use

    def __init__(enc, clauses, var_map, aux_range, top):
        enc.clauses   = clauses
        enc.var_map   = var_map
        enc.aux_range = aux_range
        enc.top       = top


# to_cnf converts f into equisatisfiable clauses.
#
# Ids of variables already present in var_map are reused. New original
# variables get fresh ids in order of their appearance in f, and Tseitin
# variables are allocated after them. All fresh ids are above both top and
# every id in var_map. var_map itself is not modified: the extended mapping
# is returned in the encoding.
#
# Every Tseitin variable is defined with both implication directions, so
# the encoding stays valid when the same subformula is used under negation.
def to_cnf(f, var_map=None, top=0):
    var_map = dict(var_map or {})
    top = max([top] + list(var_map.values()))
    for name in varlist(f):
        if name not in var_map:
            top += 1
            var_map[name] = top
    auxlo = top + 1

    enc = _Tseitin(var_map, top)
    for c in conjuncts(f):
        enc.add_conjunct(c)
    return CnfEncoding(enc.clauses, var_map, range(auxlo, enc.top+1), enc.top)

class _Tseitin:
    # .var_map      {} name -> id
    # .top          largest allocated id
    # .clauses      [] of emitted clauses
    # .lit          {} id(node) -> literal defined for node
    # .tlit         literal fixed to true, allocated on first use

    def __init__(enc, var_map, top):
        enc.var_map = var_map
        enc.top     = top
        enc.clauses = []
        enc.lit     = {}
        enc.tlit    = None

    def emit(enc, litv):
        seen = set()
        clause = []
        for l in litv:
            if -l in seen:
                return      # tautology
            if l not in seen:
                seen.add(l)
                clause.append(l)
        enc.clauses.append(tuple(clause))

    def newvar(enc):
        enc.top += 1
        return enc.top

    def truelit(enc):
        if enc.tlit is None:
            enc.tlit = enc.newvar()
            enc.emit([enc.tlit])
        return enc.tlit

    # literal returns literal for node if it is a (possibly negated) variable.
    def literal(enc, node):
        sign = 1
        while type(node) is Not:
            sign = -sign
            node = node.child
        if type(node) is Var:
            return sign * enc.var_map[node.name]
        return None

    # literals returns literals of flattened node of type t, or None if
    # some operand is not a literal. Constants are folded: None is also
    # returned when the whole node is the absorbing constant.
    def literals(enc, node, t):
        absorb = (t is Or)      # TRUE absorbs Or, FALSE absorbs And
        litv = []
        for x in _flatten(node, t):
            if type(x) is Const:
                if x.value == absorb:
                    return None
                continue
            l = enc.literal(x)
            if l is None:
                return None
            litv.append(l)
        return litv

    def add_conjunct(enc, c):
        t = type(c)
        if t is Const:
            if not c.value:
                enc.emit([])
            return

        # clause-shaped conjuncts are emitted directly
        if t is Or or t is Var or t is Not:
            litv = enc.literals(c, Or)
            if litv is not None:
                enc.emit(litv)
                return
        if t is Not and type(c.child) is And:
            litv = enc.literals(c.child, And)
            if litv is not None:
                enc.emit([-l for l in litv])
                return
        if t is Implies:
            antev = enc.literals(c.left,  And)
            consv = enc.literals(c.right, Or)
            if antev is not None and consv is not None:
                enc.emit([-l for l in antev] + consv)
                return

        enc.emit([enc.define(c)])

    # define returns literal equivalent to node, emitting Tseitin
    # definitions for its subformulas.
    def define(enc, node):
        lit = enc.lit
        for x in postorder(node):
            if id(x) in lit:
                continue
            t = type(x)
            if t is Var:
                l = enc.var_map[x.name]
            elif t is Const:
                l = enc.truelit()
                if not x.value:
                    l = -l
            elif t is Not:
                l = -lit[id(x.child)]
            else:
                a = lit[id(x.left)]
                b = lit[id(x.right)]
                l = enc.newvar()
                if t is And:        # l <-> a & b
                    enc.emit([-l, a])
                    enc.emit([-l, b])
                    enc.emit([l, -a, -b])
                elif t is Or:       # l <-> a | b
                    enc.emit([-l, a, b])
                    enc.emit([l, -a])
                    enc.emit([l, -b])
                else:               # l <-> (a -> b)
                    enc.emit([-l, -a, b])
                    enc.emit([l, a])
                    enc.emit([l, -b])
            lit[id(x)] = l
        return lit[id(node)]
