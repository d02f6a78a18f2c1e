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
"""Package generator generates random Context-aware Feature Models.

A model is a random 3-SAT formula over n_contexts context variables
c1..cK followed by n_features feature variables f1..fN:

- round(ratio·n_features) clauses are drawn. Every clause has 3 distinct
  variables, each negated with probability 1/2.
- clauses over contexts only are removed, since they would restrict the
  environment instead of the product line. With redraw_context_only such
  clauses are drawn again instead.
- all features are optional.

Variables are taken with uniform distribution, or with power-law
distribution where variable #i has weight (n/i)^(1/(β-1)).

Clause #k is drawn from its own numpy random stream spawned from the seed
as SeedSequence(seed, spawn_key=(k,)). Generation is thus deterministic and
the same on all platforms.
"""

from __future__ import print_function, division, absolute_import

from xcafm.formula import Var, Not, conj, disj
from xcafm.model import CaFM

import numpy as np
from golang.gcompat import qq

import logging
log = logging.getLogger('xcafm.generator')


CLAUSE_SIZE = 3


# GenSpecError is raised for invalid generation parameters.
class GenSpecError(ValueError): pass


# GenSpec specifies how to generate a model.
class GenSpec:
    # .n_features           number of features  (>= 1)
    # .n_contexts           number of contexts  (>= 0)
    # .ratio                clauses per feature (> 0)
    # .seed                 integer seed
    # .distribution         'uniform' | 'powerlaw'
    # .exponent             power-law exponent β (> 1)
    # .redraw_context_only  redraw context-only clauses instead of removing them

    def __init__(spec, n_features, n_contexts, ratio, seed=0, distribution='uniform',
                 exponent=2.5, redraw_context_only=False):
        spec.n_features          = n_features
        spec.n_contexts          = n_contexts
        spec.ratio               = ratio
        spec.seed                = seed
        spec.distribution        = distribution
        spec.exponent            = exponent
        spec.redraw_context_only = redraw_context_only

    def to_dict(spec):
        return {
            'n_features':          spec.n_features,
            'n_contexts':          spec.n_contexts,
            'ratio':               spec.ratio,
            'seed':                spec.seed,
            'distribution':        spec.distribution,
            'exponent':            spec.exponent,
            'redraw_context_only': spec.redraw_context_only,
        }

    # verify raises GenSpecError if spec is invalid.
    def verify(spec):
        def bad(msg):
            raise GenSpecError('invalid generator spec: %s' % msg)
        if spec.n_features < 1:
            bad('n_features must be >= 1')
        if spec.n_contexts < 0:
            bad('n_contexts must be >= 0')
        if not spec.ratio > 0:
            bad('ratio must be > 0')
        if spec.n_features + spec.n_contexts < CLAUSE_SIZE:
            bad('%d variables cannot form clauses of %d distinct variables' % (
                spec.n_features + spec.n_contexts, CLAUSE_SIZE))
        if spec.distribution not in ('uniform', 'powerlaw'):
            bad('unknown distribution %s' % qq(spec.distribution))
        if spec.distribution == 'powerlaw' and not spec.exponent > 1:
            bad('power-law exponent must be > 1')


# weights returns probabilities of picking variables 1..n.
def weights(spec):
    n = spec.n_features + spec.n_contexts
    if spec.distribution == 'uniform':
        return np.full(n, 1./n)
    i = np.arange(1, n+1, dtype=np.float64)
    w = (n / i) ** (1. / (spec.exponent - 1))
    return w / w.sum()


# generate generates a model according to spec.
#
# The model metadata records the spec, the number of drawn clauses and the
# number of clauses removed as context-only.
def generate(spec):
    spec.verify()
    nc = spec.n_contexts
    n  = spec.n_features + nc
    names = ['c%d' % (i+1) for i in range(nc)] + \
            ['f%d' % (i+1) for i in range(spec.n_features)]
    p = weights(spec)
    ndrawn = int(round(spec.ratio * spec.n_features))

    clausev  = []
    nremoved = 0
    for k in range(ndrawn):
        rng = np.random.default_rng(
                np.random.SeedSequence(spec.seed & (2**64-1), spawn_key=(k,)))
        while True:
            ids   = rng.choice(n, size=CLAUSE_SIZE, replace=False, p=p)
            signs = rng.integers(0, 2, size=CLAUSE_SIZE)
            if (ids >= nc).any() or not spec.redraw_context_only:
                break
        if not (ids >= nc).any():
            nremoved += 1
            continue
        litv = []
        for v, sign in zip(ids, signs):
            x = Var(names[v])
            litv.append(x if sign else Not(x))
        clausev.append(disj(litv))

    log.debug('generate: %d clauses drawn, %d context-only removed', ndrawn, nremoved)
    features = names[nc:]
    return CaFM(names[:nc], features, features, conj(clausev), metadata={
        'generator':        spec.to_dict(),
        'clauses_drawn':    ndrawn,
        'clauses_removed':  nremoved,
        'clauses':          len(clausev),
    })


# generate_many generates count models with seeds spec.seed, spec.seed+1, ...
def generate_many(spec, count):
    mv = []
    for i in range(count):
        s = GenSpec(spec.n_features, spec.n_contexts, spec.ratio, spec.seed + i,
                    spec.distribution, spec.exponent, spec.redraw_context_only)
        mv.append(generate(s))
    return mv
