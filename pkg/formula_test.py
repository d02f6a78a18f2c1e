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

from xcafm import formula
from xcafm.formula import parse, Var, Not, And, Or, Implies, TRUE, FALSE, \
        evaluate, substitute, conj, disj, conjuncts, to_cnf, ParseError, EvalError

import itertools
import numpy as np
from pytest import raises


ECALL = ("eCall & (eCall -> eCallEurope | eCallRussia) & (eCall -> GPS | GLONASS) & "
         "!(GPS & GLONASS) & (eCallEurope -> eCall) & (eCallRussia -> eCall) & "
         "(GPS -> eCall) & (GLONASS -> eCall) & (eCallEurope -> GPS) & (eCallRussia -> GLONASS)")
ECALL_CTX = ECALL + " & (Location -> eCallRussia) & (!Location -> !eCallRussia)"


# randformula returns random formula over names with connective depth <= depth.
def randformula(rng, names, depth):
    if depth == 0 or rng.random() < 0.2:
        return Var(names[rng.integers(len(names))])
    k = rng.integers(5)
    if k == 0:
        return Not(randformula(rng, names, depth-1))
    t = (And, Or, Implies, And)[k-1]
    return t(randformula(rng, names, depth-1), randformula(rng, names, depth-1))

# assignments yields all assignments of names.
def assignments(names):
    for bits in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))

# cnf_table returns all assignments of variables 1..n as rows of bits
# together with mask of rows that satisfy clauses.
def cnf_table(clauses, n):
    bits = ((np.arange(2**n)[:, None] >> np.arange(n)[::-1]) & 1).astype(bool)
    ok = np.ones(2**n, dtype=bool)
    for c in clauses:
        sat = np.zeros(2**n, dtype=bool)
        for l in c:
            col = bits[:, abs(l)-1]
            sat |= col if l > 0 else ~col
        ok &= sat
    return bits, ok

def cnf_satisfiable(clauses, n):
    _, ok = cnf_table(clauses, n)
    return bool(ok.any())


def test_parse():
    def _(text, f):
        assert parse(text) == f

    a, b, c = Var('a'), Var('b'), Var('c')
    _("eCall",              Var('eCall'))
    _("a & (b | !c)",       And(a, Or(b, Not(c))))
    _("a -> b -> c",        Implies(a, Implies(b, c)))
    _("a & b & c",          And(And(a, b), c))
    _("a | b | c",          Or(Or(a, b), c))
    _("a | b & c",          Or(a, And(b, c)))
    _("a & b -> c | a",     Implies(And(a, b), Or(c, a)))
    _("!!a",                Not(Not(a)))
    _("!(a -> b)",          Not(Implies(a, b)))
    _("(a -> b) -> c",      Implies(Implies(a, b), c))
    _(" a\n&\n\tb ",        And(a, b))
    _("_x1 | X_2",          Or(Var('_x1'), Var('X_2')))


def test_parse_error():
    def _(text, line, col, token):
        with raises(ParseError) as exc:
            parse(text)
        e = exc.value
        assert (e.line, e.col, e.token) == (line, col, token)
        assert str(e).startswith('%d:%d: ' % (line, col))

    _("",               1, 1, '')
    _("a &",            1, 4, '')
    _("a b",            1, 3, 'b')
    _("(a | b",         1, 7, '')
    _("a | b)",         1, 6, ')')
    _("a $ b",          1, 3, '$')
    _("a -",            1, 3, '-')
    _("a &\n& b",       2, 1, '&')
    _("1a",             1, 1, '1')
    _("a <-> b",        1, 3, '<')
    _("((a)",           1, 5, '')
    _("()",             1, 2, ')')
    _("!",              1, 2, '')


def test_print():
    def _(f, text):
        assert str(f) == text
        assert parse(text) == f

    a, b, c = Var('a'), Var('b'), Var('c')
    _(Var('x'),                         "x")
    _(Implies(And(a, b), c),            "a & b -> c")
    _(Not(Or(a, b)),                    "!(a | b)")
    _(And(a, Or(b, Not(c))),            "a & (b | !c)")
    _(Implies(a, Implies(b, c)),        "a -> b -> c")
    _(Implies(Implies(a, b), c),        "(a -> b) -> c")
    _(And(a, And(b, c)),                "a & (b & c)")
    _(And(And(a, b), c),                "a & b & c")
    _(Or(a, Or(b, c)),                  "a | (b | c)")
    _(Or(And(a, b), And(b, c)),         "a & b | b & c")
    _(And(Or(a, b), Or(b, c)),          "(a | b) & (b | c)")
    _(Not(Not(a)),                      "!!a")
    _(Not(And(a, b)),                   "!(a & b)")
    _(Or(Implies(a, b), c),             "(a -> b) | c")

    assert str(TRUE)  == "⊤"
    assert str(FALSE) == "⊥"


def test_print_roundtrip():
    rng = np.random.default_rng(1)
    names = ['a', 'b', 'c', 'd']
    for _ in range(500):
        f = randformula(rng, names, 5)
        assert parse(str(f)) == f


# long conjunctions must not hit python recursion limit.
def test_deep():
    n = 5000
    f = conj([Or(Var('x%d' % i), Not(Var('y%d' % i))) for i in range(n)])
    text = str(f)
    assert parse(text) == f
    assert len(conjuncts(f)) == n
    assert len(formula.vars(f)) == 2*n
    a = {}
    for i in range(n):
        a['x%d' % i] = False
        a['y%d' % i] = False
    assert evaluate(f, a) is True
    assert substitute(f, {'y0': True}) != f
    enc = to_cnf(Not(f))
    assert len(enc.clauses) > n

    # deep nesting of parentheses, negations and right operands
    m = 3000
    assert parse('('*m + 'a' + ')'*m) == Var('a')
    assert str(parse('!'*m + 'a')) == '!'*m + 'a'
    g = Var('x0')
    for i in range(1, m):
        g = And(Var('x%d' % i), g)
    text = str(g)
    assert text.endswith('x1 & x0' + ')'*(m-2))
    assert parse(text) == g
    with raises(ParseError) as exc:
        parse('('*m + 'a')
    assert (exc.value.line, exc.value.col, exc.value.token) == (1, m+2, '')


def test_evaluate():
    a, b = Var('a'), Var('b')
    assert evaluate(Implies(a, b), {'a': False, 'b': False}) is True
    assert evaluate(Implies(a, b), {'a': True,  'b': False}) is False
    assert evaluate(And(a, Not(b)), {'a': True, 'b': False}) is True
    assert evaluate(TRUE, {}) is True

    phi = parse(ECALL)
    names = ['eCall', 'eCallEurope', 'eCallRussia', 'GPS', 'GLONASS']
    v = {_: False for _ in names}
    assert evaluate(phi, v) is False
    v.update(eCall=True, eCallRussia=True, GLONASS=True)
    assert evaluate(phi, v) is True

    with raises(EvalError, match='eCallRussia') as exc:
        evaluate(phi, {'eCall': True, 'eCallEurope': True, 'GPS': True, 'GLONASS': False})
    assert exc.value.name == 'eCallRussia'


def test_vars():
    a = Var('a')
    assert formula.vars(Var('x')) == {'x'}
    assert formula.vars(And(a, Not(a))) == {'a'}
    assert formula.vars(parse(ECALL_CTX)) == {'Location', 'eCall', 'eCallEurope',
                                              'GPS', 'eCallRussia', 'GLONASS'}
    assert formula.varlist(parse("b & (a | b) -> c")) == ['b', 'a', 'c']


def test_substitute():
    def _(text, values, expect):
        assert str(substitute(parse(text), values)) == expect

    _("a & b",          {'a': True},                "b")
    _("a & b",          {'a': False},               "⊥")
    _("a | b",          {'b': True},                "⊤")
    _("a | b",          {'b': False},               "a")
    _("a -> b",         {'a': False},               "⊤")
    _("a -> b",         {'a': True},                "b")
    _("a -> b",         {'b': False},               "!a")
    _("a -> b",         {'b': True},                "⊤")
    _("!a",             {'a': True},                "⊥")
    _("a & (c -> b)",   {'c': True},                "a & b")
    _("Location",       {'Location': False},        "⊥")

    # untouched subtrees are shared
    f = parse("(a | b) & c")
    g = substitute(f, {'c': True})
    assert g is f.left
    assert substitute(f, {}) is f


def test_conj_disj():
    a, b, c = Var('a'), Var('b'), Var('c')
    assert conj([]) is TRUE
    assert disj([]) is FALSE
    assert conj([a]) is a
    assert conj([a, b, c]) == And(And(a, b), c)
    assert disj([a, b, c]) == Or(Or(a, b), c)
    assert conjuncts(parse("a & (b & c) & a")) == [a, b, c, a]
    assert conjuncts(parse("a & (b | c)")) == [a, Or(b, c)]
    assert conjuncts(a) == [a]


def test_var_name():
    with raises(ValueError):
        Var('1x')
    with raises(ValueError):
        Var('')
    with raises(ValueError):
        Var('a-b')


def test_eq():
    assert parse("a & b") == parse("a&b")
    assert parse("a & b") != parse("b & a")
    assert parse("a") != Not(Var('a'))
    assert Var('a') != 'a'
    assert len({parse("a | b"), parse("a|b"), parse("b | a")}) == 2


def test_to_cnf():
    enc = to_cnf(Var('x'))
    assert enc.clauses == [(1,)]
    assert enc.var_map == {'x': 1}
    assert len(enc.aux_range) == 0

    # contradiction stays contradiction
    enc = to_cnf(parse("a & !a"))
    assert not cnf_satisfiable(enc.clauses, enc.top)

    # a & b: exactly a=b=true
    enc = to_cnf(parse("a & b"))
    assert sorted(enc.clauses) == [(1,), (2,)]

    # clause-shaped conjuncts are emitted directly
    enc = to_cnf(parse("(a | !b) & (a & b -> c | d) & !(a & c)"))
    assert enc.clauses == [(1, -2), (-1, -2, 3, 4), (-1, -3)]
    assert len(enc.aux_range) == 0

    # tautologies are dropped and duplicate literals merged
    enc = to_cnf(parse("(a | !a | b) & (b | b | c)"))
    assert enc.clauses == [(2, 3)]

    # existing ids are reused, fresh ids are above everything
    enc = to_cnf(parse("(x | y) & !(x & z)"), var_map={'x': 7}, top=10)
    assert enc.var_map == {'x': 7, 'y': 11, 'z': 12}
    lo = enc.aux_range.start
    assert lo > 12
    for c in enc.clauses:
        for l in c:
            assert abs(l) in (7, 11, 12) or abs(l) in enc.aux_range

    # constants
    assert to_cnf(TRUE).clauses == []
    assert to_cnf(FALSE).clauses == [()]
    enc = to_cnf(Or(Var('a'), Not(Or(TRUE, Var('b')))))
    assert cnf_satisfiable(enc.clauses, enc.top)


# to_cnf is equisatisfiable with its input and models project onto models.
def test_to_cnf_random():
    rng = np.random.default_rng(2)
    names = ['a', 'b', 'c', 'd', 'e']
    for _ in range(200):
        f = randformula(rng, names, 3)
        enc = to_cnf(f)
        orig = formula.varlist(f)
        assert set(enc.var_map) == set(orig)
        ids = set(enc.var_map.values())
        assert ids.isdisjoint(enc.aux_range)

        fsat = False
        for a in assignments(orig):
            if evaluate(f, a):
                fsat = True
                break

        bits, ok = cnf_table(enc.clauses, enc.top)
        csat = bool(ok.any())
        assert csat == fsat, str(f)
        # projection of clause models satisfies f
        for row in np.flatnonzero(ok)[:16]:
            a = {name: bool(bits[row, v-1]) for name, v in enc.var_map.items()}
            assert evaluate(f, a), str(f)
