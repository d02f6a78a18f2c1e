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
"""Program bench compares analysis approaches on a set of models.

Every (instance, analysis, approach) is run several times with seeds
seed, seed+1, ... and every run is limited by its own timeout. A run that
times out is accounted with wall time equal to the timeout.

- use bench to run the experiment and get BenchRow for every run.
- use summarize to compute averages, best approaches, virtual-best series
  and cross-approach disagreements from the rows.
"""

from __future__ import print_function, division, absolute_import

from xcafm import analyses
from xcafm.cli import load, DocumentError

import csv
import json
import os
from collections import OrderedDict
import numpy as np
import sys, getopt
from golang import func, defer, context, sync

import logging
log = logging.getLogger('xcafm.cli.bench')


DEFAULT_REPETITIONS = 10
DEFAULT_TIMEOUT     = 300   # seconds

CSV_COLUMNS = ('instance', 'analysis', 'approach', 'rep', 'seed', 'wall_time_s', 'timeout', 'verdict')


# BenchRow is the result of one benchmark run.
class BenchRow:
    # .instance     instance id
    # .analysis     analysis kind
    # .approach     approach
    # .rep          repetition index
    # .seed         seed the run used
    # .wall_time    seconds; timeout value if the run timed out
    # .timeout      whether the run timed out
    # .verdict      Report.verdict() | 'timeout' | 'error'
    # .error        error text for runs that failed, else None

    def __init__(row, instance, analysis, approach, rep, seed, wall_time, timeout, verdict, error=None):
        row.instance  = instance
        row.analysis  = analysis
        row.approach  = approach
        row.rep       = rep
        row.seed      = seed
        row.wall_time = wall_time
        row.timeout   = timeout
        row.verdict   = verdict
        row.error     = error

    def __repr__(row):
        return 'BenchRow(%s %s/%s #%d: %s %.3fs)' % (row.instance, row.analysis,
                    row.approach, row.rep, row.verdict, row.wall_time)

    # completed returns whether the run finished with a verdict.
    def completed(row):
        return not row.timeout and row.error is None

    def csv_dict(row):
        verdict = row.verdict
        if row.error is not None:
            verdict = 'error: %s' % row.error
        return {
            'instance':     row.instance,
            'analysis':     row.analysis,
            'approach':     row.approach,
            'rep':          row.rep,
            'seed':         row.seed,
            'wall_time_s':  '%.6f' % row.wall_time,
            'timeout':      int(row.timeout),
            'verdict':      verdict,
        }


# bench runs every analysis with every applicable approach on every instance.
#
# instances is [] of (id, CaFM). Up to parallel runs go concurrently.
# emit(row) is called for every finished run; calls to emit are serialized.
# The returned rows are in (instance, analysis, approach, rep) order.
def bench(ctx, instances, analysisv, approaches, repetitions=DEFAULT_REPETITIONS,
          timeout=DEFAULT_TIMEOUT, parallel=1, seed=0, stop_mode=analyses.STOP_FIRST, emit=None):
    jobv = []
    for inst, m in instances:
        for kind in analysisv:
            applicable = analyses.applicable_approaches(analyses.normkind(kind)) + ('portfolio',)
            for approach in approaches:
                if approach not in applicable:
                    continue
                for rep in range(repetitions):
                    jobv.append((len(jobv), inst, m, kind, approach, rep))

    mu = sync.Mutex()
    todo = list(jobv)
    rowv = [None] * len(jobv)

    def worker(ctx):
        while True:
            with mu:
                if not todo:
                    return
                i, inst, m, kind, approach, rep = todo.pop(0)
            row = _run1(ctx, inst, m, kind, approach, rep, seed + rep, timeout, stop_mode)
            with mu:
                rowv[i] = row
                if emit is not None:
                    emit(row)

    wg = sync.WorkGroup(ctx)
    for _ in range(max(1, parallel)):
        wg.go(worker)
    wg.wait()
    return rowv

@func
def _run1(ctx, inst, m, kind, approach, rep, seed, timeout, stop_mode):
    rctx, cancel = context.with_timeout(ctx, timeout)
    defer(cancel)
    def row(wall_time, timedout, verdict, error=None):
        return BenchRow(inst, kind, approach, rep, seed, wall_time, timedout, verdict, error)
    try:
        r = analyses.analyze(rctx, m, kind, approach, stop_mode=stop_mode, seed=seed)
    except Exception as e:
        if ctx.err() is not None:
            raise ctx.err()
        if rctx.err() is not None:
            return row(timeout, True, 'timeout')
        log.exception('%s %s/%s #%d: failed:', inst, kind, approach, rep)
        return row(0., False, 'error', error=str(e))
    if r.incomplete:
        if ctx.err() is not None:
            raise ctx.err()
        log.info('%s %s/%s #%d: timeout', inst, kind, approach, rep)
        return row(timeout, True, 'timeout')
    log.info('%s %s/%s #%d: %s in %.3fs', inst, kind, approach, rep, r.verdict(), r.wall_time)
    return row(r.wall_time, False, r.verdict())


# category returns result category of verdict for best-approach tables.
def category(kind, verdict):
    if kind == 'voidness':
        return 'Void' if verdict == 'void' else 'Not Void'
    if kind == 'redundancy':
        return 'Redundant' if verdict == 'redundant' else 'Not Redundant'
    return {'dead': 'Dead', 'false-optional': 'False'}.get(verdict, 'No Anomaly')


# summarize computes summary of benchmark rows.
#
# ncontexts gives {} instance -> number of contexts of the instance, by which
# best-approach counts are partitioned.
def summarize(rows, ncontexts):
    # (instance, analysis) -> approach -> [] of rows
    groups = OrderedDict()
    for row in rows:
        groups.setdefault((row.instance, row.analysis), OrderedDict()) \
              .setdefault(row.approach, []).append(row)

    instances      = OrderedDict()
    best_counts    = OrderedDict()
    vbs            = OrderedDict()
    forall_wins    = OrderedDict()
    iterative_wins = OrderedDict()
    unsolved       = []
    disagreements  = []
    nerrors        = 0

    for (inst, kind), byapproach in groups.items():
        entry = OrderedDict()
        verdicts = OrderedDict()    # approach -> set of verdicts of completed runs
        means = OrderedDict()       # approach -> mean over runs without errors
        for approach, rowv in byapproach.items():
            ok = [_ for _ in rowv if _.error is None]
            nerrors += len(rowv) - len(ok)
            t = np.array([_.wall_time for _ in ok], dtype=np.float64)
            stat = OrderedDict()
            stat['runs']     = len(rowv)
            stat['timeouts'] = sum(1 for _ in rowv if _.timeout)
            stat['errors']   = len(rowv) - len(ok)
            stat['mean']     = float(t.mean()) if len(t) else None
            stat['std']      = float(t.std())  if len(t) else None
            done = set(_.verdict for _ in rowv if _.completed())
            stat['verdicts'] = sorted(done)
            entry[approach] = stat
            if done:
                verdicts[approach] = done
            if len(t):
                means[approach] = stat['mean']
        instances.setdefault(inst, OrderedDict())[kind] = entry

        allv = set()
        for v in verdicts.values():
            allv.update(v)
        if len(allv) > 1:
            disagreements.append(OrderedDict([
                ('instance', inst), ('analysis', kind),
                ('verdicts', OrderedDict((a, sorted(v)) for a, v in verdicts.items()))]))
            continue
        if not allv:
            unsolved.append(OrderedDict([('instance', inst), ('analysis', kind)]))
            continue
        verdict = allv.pop()

        # best approach: least average time among those that completed at least once
        solved = [a for a in means if a in verdicts]
        best = min(solved, key=lambda a: means[a])
        cat = category(kind, verdict)
        nc = str(ncontexts.get(inst, 0))
        c = best_counts.setdefault(kind, OrderedDict()).setdefault(nc, OrderedDict()) \
                       .setdefault(cat, OrderedDict())
        c[best] = c.get(best, 0) + 1

        v = vbs.setdefault(kind, OrderedDict([('all', []), ('iterative+forall', [])]))
        v['all'].append(min(means[a] for a in solved))
        pair = [means[a] for a in ('iterative', 'forall') if a in means]
        if pair:
            v['iterative+forall'].append(min(pair))
        if 'iterative' in means and 'forall' in means:
            if means['forall'] < means['iterative']:
                forall_wins.setdefault(kind, []).append(inst)
            elif means['iterative'] < means['forall']:
                iterative_wins.setdefault(kind, []).append(inst)

    for v in vbs.values():
        for series in v.values():
            series.sort()

    s = OrderedDict()
    s['instances']              = instances
    s['best_counts']            = best_counts
    s['virtual_best']           = vbs
    s['forall_beats_iterative'] = forall_wins
    s['iterative_beats_forall'] = iterative_wins
    s['unsolved']               = unsolved
    s['disagreements']          = disagreements
    s['errors']                 = nerrors
    return s


# ---- command line ----

summary = "compare approaches on a set of models"

def usage(out):
    print("""\
Usage: xcafm bench [OPTIONS] <instance>+
Run analyses with several approaches on models and compare them.

<instance> is a model file or a directory with *.json model files.

Every run is written as a row of CSV with columns

    %s

and the summary is written in JSON. The summary contains per-instance
average and standard deviation of wall time, counts of instances where each
approach was the fastest by number of contexts and result category,
virtual-best series, and instances where forall beat iterative and vice versa.

Exit status is 2 if approaches disagree on a verdict or some run failed.

Options:

        --analyses <a,...>      analyses to run (default voidness,all-features)
        --approaches <a,...>    approaches to compare (default iterative,forall,pruning)
        --repetitions <n>       runs per (instance, analysis, approach) (default %d)
        --timeout-secs <t>      timeout of one run in seconds (default %d)
        --parallel <w>          number of concurrent runs (default 1)
        --seed <s>              seed of the first repetition (default 0)
        --all                   find all anomalies instead of stopping at the first
        --csv <path>            where to write rows (default bench.csv)
        --summary <path>        where to write summary (default stdout)
    -h  --help                  show this help
""" % (','.join(CSV_COLUMNS), DEFAULT_REPETITIONS, DEFAULT_TIMEOUT), file=out)


def _fail(msg):
    print('xcafm bench: %s' % msg, file=sys.stderr)
    sys.exit(2)


# instance_paths expands directories in argv into sorted *.json files.
def instance_paths(argv):
    pathv = []
    for arg in argv:
        if os.path.isdir(arg):
            for name in sorted(os.listdir(arg)):
                if name.endswith('.json'):
                    pathv.append(os.path.join(arg, name))
        else:
            pathv.append(arg)
    return pathv


def main(ctx, argv):
    try:
        optv, argv = getopt.getopt(argv[1:], "h", [
            "analyses=", "approaches=", "repetitions=", "timeout-secs=", "parallel=",
            "seed=", "all", "csv=", "summary=", "help"])
    except getopt.GetoptError as e:
        print(e, file=sys.stderr)
        usage(sys.stderr)
        sys.exit(2)

    analysisv   = ['voidness', 'all-features']
    approaches  = ['iterative', 'forall', 'pruning']
    repetitions = DEFAULT_REPETITIONS
    timeout     = DEFAULT_TIMEOUT
    parallel    = 1
    seed        = 0
    stop_mode   = analyses.STOP_FIRST
    csvpath     = 'bench.csv'
    sumpath     = None
    try:
        for opt, arg in optv:
            if opt in (      "--analyses"):
                analysisv = arg.split(',')
                for kind in analysisv:
                    analyses.normkind(kind)
            if opt in (      "--approaches"):
                approaches = arg.split(',')
            if opt in (      "--repetitions"):
                repetitions = int(arg)
            if opt in (      "--timeout-secs"):
                timeout = float(arg)
            if opt in (      "--parallel"):
                parallel = int(arg)
            if opt in (      "--seed"):
                seed = int(arg)
            if opt in (      "--all"):
                stop_mode = analyses.STOP_ALL
            if opt in (      "--csv"):
                csvpath = arg
            if opt in (      "--summary"):
                sumpath = arg

            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
    except ValueError as e:
        _fail(e)

    if len(argv) < 1:
        usage(sys.stderr)
        sys.exit(2)

    instances = []
    ncontexts = {}
    try:
        for path in instance_paths(argv):
            inst = os.path.splitext(os.path.basename(path))[0]
            m = load(path)
            instances.append((inst, m))
            ncontexts[inst] = len(m.contexts)
    except (DocumentError, IOError) as e:
        _fail(e)

    try:
        f = open(csvpath, 'w', newline='')
    except OSError as e:
        _fail(e)
    with f:
        w = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        w.writeheader()
        def emit(row):
            w.writerow(row.csv_dict())
            f.flush()
        rows = bench(ctx, instances, analysisv, approaches, repetitions=repetitions,
                     timeout=timeout, parallel=parallel, seed=seed, stop_mode=stop_mode,
                     emit=emit)

    s = summarize(rows, ncontexts)
    text = json.dumps(s, indent=2) + '\n'
    if sumpath is None:
        sys.stdout.write(text)
    else:
        try:
            with open(sumpath, 'w') as f:
                f.write(text)
        except OSError as e:
            _fail(e)

    for d in s['disagreements']:
        print('xcafm bench: %s/%s: approaches disagree: %s' % (d['instance'], d['analysis'],
                ' '.join('%s=%s' % (a, ','.join(v)) for a, v in d['verdicts'].items())),
              file=sys.stderr)
    if s['errors']:
        print('xcafm bench: %d runs failed' % s['errors'], file=sys.stderr)
    if s['disagreements'] or s['errors']:
        sys.exit(2)
