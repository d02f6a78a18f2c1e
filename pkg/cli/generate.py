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
"""Program generate generates random models."""

from __future__ import print_function, division, absolute_import

from xcafm.generator import GenSpec, GenSpecError, generate, generate_many
from xcafm.cli import dump, dumps

import os
import sys, getopt


summary = "generate random models"

def usage(out):
    print("""\
Usage: xcafm generate [OPTIONS]
Generate random context-aware feature model.

The model formula is a conjunction of random clauses of 3 literals over
contexts c1..cK and features f1..fN. Clauses over contexts only are removed.
All features are optional.

Options:

        --features <n>          number of features (required)
        --contexts <k>          number of contexts (default 0)
        --ratio <r>             clauses per feature (required)
        --seed <s>              random seed (default 0)
        --distribution <d>      uniform | powerlaw (default uniform)
        --exponent <β>          power-law exponent (default 2.5)
        --redraw-context-only   redraw clauses over contexts only instead of removing them
        --count <n>             generate n models with seeds s, s+1, ...
                                and save them as <output>/inst-<seed>.json
    -o  --output <path>         where to save the model (default stdout)
    -h  --help                  show this help
""", file=out)


def _fail(msg):
    print('xcafm generate: %s' % msg, file=sys.stderr)
    sys.exit(2)


def main(ctx, argv):
    try:
        optv, argv = getopt.getopt(argv[1:], "ho:", [
            "features=", "contexts=", "ratio=", "seed=", "distribution=",
            "exponent=", "redraw-context-only", "count=", "output=", "help"])
    except getopt.GetoptError as e:
        print(e, file=sys.stderr)
        usage(sys.stderr)
        sys.exit(2)

    nfeatures = None
    ncontexts = 0
    ratio     = None
    seed      = 0
    distrib   = 'uniform'
    exponent  = 2.5
    redraw    = False
    count     = None
    output    = None
    try:
        for opt, arg in optv:
            if opt in (      "--features"):
                nfeatures = int(arg)
            if opt in (      "--contexts"):
                ncontexts = int(arg)
            if opt in (      "--ratio"):
                ratio = float(arg)
            if opt in (      "--seed"):
                seed = int(arg)
            if opt in (      "--distribution"):
                distrib = arg
            if opt in (      "--exponent"):
                exponent = float(arg)
            if opt in (      "--redraw-context-only"):
                redraw = True
            if opt in (      "--count"):
                count = int(arg)
            if opt in ("-o", "--output"):
                output = arg

            if opt in ("-h", "--help"):
                usage(sys.stdout)
                sys.exit(0)
    except ValueError as e:
        _fail(e)

    if argv or nfeatures is None or ratio is None:
        usage(sys.stderr)
        sys.exit(2)

    spec = GenSpec(nfeatures, ncontexts, ratio, seed, distrib, exponent, redraw)
    try:
        if count is None:
            mv = [generate(spec)]
        else:
            if output is None:
                _fail('--count needs --output directory')
            mv = generate_many(spec, count)
    except GenSpecError as e:
        _fail(e)

    # summary goes to stderr if the model itself goes to stdout
    info = sys.stdout if output is not None else sys.stderr
    for m in mv:
        md = m.metadata
        try:
            if count is None:
                if output is None:
                    sys.stdout.write(dumps(m))
                else:
                    dump(m, output)
                path = output or '<stdout>'
            else:
                os.makedirs(output, exist_ok=True)
                path = os.path.join(output, 'inst-%d.json' % md['generator']['seed'])
                dump(m, path)
        except OSError as e:
            _fail(e)
        print('%s: %d features, %d contexts, %d clauses drawn, %d context-only removed, %d kept' % (
                path, len(m.features), len(m.contexts), md['clauses_drawn'],
                md['clauses_removed'], md['clauses']), file=info)
