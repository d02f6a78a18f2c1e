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
"""Program check runs one analysis on a model and reports the result.

Exit status is 0 if no anomaly is found, 1 if an anomaly is found and 2 on
error or timeout.
"""

from __future__ import print_function, division, absolute_import

from xcafm import analyses, formula, qbf
from xcafm.sat import Solver
from xcafm.cli import load, report_text, DocumentError

import json
import sys, getopt
from golang import func, defer, context


summary = "check a model for anomalies"

def usage(out):
    print("""\
Usage: xcafm check [OPTIONS] <model.json>
Check context-aware feature model for anomalies.

<model.json> is a model file (see 'xcafm help cafm').

Options:

        --analysis <kind>       voidness | dead | false-optional | redundancy | all-features
                                (default voidness)
        --approach <approach>   iterative | forall | pruning | oracle | portfolio
                                (default iterative, see 'xcafm help approaches')
        --stop-at-first         stop at the first found anomaly (default)
        --all                   find all anomalies
        --seed <n>              seed for SAT solver decisions (default 0)
        --timeout-secs <t>      abort analysis after t seconds
        --candidate-index <k>   redundancy: check only conjunct #k (0-based)
        --candidate <formula>   redundancy: check whether the model implies formula
        --output <format>       text | json (default text)
        --dump-cnf <path>       also write clauses of the model formula in DIMACS format
    -h  --help                  show this help

Exit status is 0 if no anomaly is found, 1 if an anomaly is found and 2 on
error or timeout.
""", file=out)


def _fail(msg):
    print('xcafm check: %s' % msg, file=sys.stderr)
    sys.exit(2)


@func
def main(ctx, argv):
    try:
        optv, argv = getopt.getopt(argv[1:], "h", [
            "analysis=", "approach=", "stop-at-first", "all", "seed=",
            "timeout-secs=", "candidate-index=", "candidate=", "output=",
            "dump-cnf=", "help"])
    except getopt.GetoptError as e:
        print(e, file=sys.stderr)
        usage(sys.stderr)
        sys.exit(2)

    kind       = 'voidness'
    approach   = 'iterative'
    stop_mode  = analyses.STOP_FIRST
    seed       = 0
    timeout    = None
    index      = None
    candidate  = None
    output     = 'text'
    dump_cnf   = None
    try:
        for opt, arg in optv:
            if opt in (      "--analysis"):
                kind = arg
            if opt in (      "--approach"):
                approach = arg
            if opt in (      "--stop-at-first"):
                stop_mode = analyses.STOP_FIRST
            if opt in (      "--all"):
                stop_mode = analyses.STOP_ALL
            if opt in (      "--seed"):
                seed = int(arg)
            if opt in (      "--timeout-secs"):
                timeout = float(arg)
            if opt in (      "--candidate-index"):
                index = int(arg)
            if opt in (      "--candidate"):
                candidate = formula.parse(arg)
            if opt in (      "--output"):
                if arg not in ('text', 'json'):
                    raise ValueError('invalid output format %s' % arg)
                output = arg
            if opt in (      "--dump-cnf"):
                dump_cnf = arg

            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
    except ValueError as e:
        _fail(e)

    if len(argv) != 1:
        usage(sys.stderr)
        sys.exit(2)

    try:
        m = load(argv[0])
    except (DocumentError, IOError) as e:
        _fail(e)

    if dump_cnf is not None:
        s = Solver(seed)
        s.declare(m.contexts + m.features)
        s.push(m.formula)
        try:
            with open(dump_cnf, 'w') as f:
                s.write_dimacs(f)
        except OSError as e:
            _fail(e)

    if timeout is not None:
        ctx, cancel = context.with_timeout(ctx, timeout)
        defer(cancel)

    try:
        r = analyses.analyze(ctx, m, kind, approach, stop_mode=stop_mode, seed=seed,
                             index=index, candidate=candidate)
    except (analyses.AnalysisError, qbf.ResourceLimit) as e:
        _fail(e)

    if output == 'json':
        json.dump(r.to_dict(), sys.stdout, indent=2)
        sys.stdout.write('\n')
    else:
        sys.stdout.write(report_text(r))

    if r.incomplete:
        print('xcafm check: analysis did not complete', file=sys.stderr)
        sys.exit(2)
    sys.exit(1 if r.anomaly_found() else 0)
