#!/usr/bin/env python
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
"""Program xcafm runs anomaly analyses of context-aware feature models.

The work is done by subcommands living in xcafm.cli.<command> modules. Every
such module provides summary, usage(out) and main(ctx, argv).
"""

from __future__ import print_function, division, absolute_import

from xcafm.cli import help as help_module

import getopt
import importlib
import logging
import sys
from collections import OrderedDict

from golang import func, defer, chan, go
from golang import context, os as gos, syscall
from golang.os import signal
from golang.gcompat import qq


# commands is ordered {} name -> module of every xcafm subcommand.
commands = OrderedDict((name, importlib.import_module('xcafm.cli.' + name))
                       for name in ('check', 'generate', 'bench'))


def usage(out):
    cmdv   = ["    %-11s %s" % (name, mod.summary) for name, mod in commands.items()]
    topicv = ["    %-11s %s" % (topic, summary)
              for topic, (summary, _) in help_module.topic_dict.items()]
    print("""\
xcafm finds anomalies in context-aware feature models.

Usage:

    xcafm [-v] command [arguments]

The commands are:

%s

Use "xcafm help [command]" for more information about a command.

Additional help topics:

%s

Use "xcafm help [topic]" for more information about that topic.

Options:

    -v  --verbose   log progress; repeat for debug output
    -h  --help      show this help
""" % ('\n'.join(cmdv), '\n'.join(topicv)), file=out)


# help_text returns help about a command or a topic, or None if there is no such.
def help_text(topic):
    mod = commands.get(topic)
    if mod is not None:
        return mod.usage
    if topic in help_module.topic_dict:
        _, text = help_module.topic_dict[topic]
        return lambda out: print(text, file=out)
    return None

def help(argv):
    if len(argv) != 1:
        usage(sys.stderr)
        sys.exit(2)
    show = help_text(argv[0])
    if show is None:
        print("Unknown help topic %s.  Run 'xcafm help'." % qq(argv[0]), file=sys.stderr)
        sys.exit(2)
    show(sys.stdout)
    sys.exit(0)


# setup_logging configures logging of xcafm.* loggers for verbosity level.
#
#   0   warnings and errors
#   1   + one line per analysis run
#   2+  + every SAT call and CEGAR refinement
def setup_logging(verbose):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(asctime)s %(name)s: %(message)s')


# cancel_on_signal arranges cancel to be called on SIGINT or SIGTERM.
#
# It returns function that stops the watching.
def cancel_on_signal(cancel):
    sigq = chan(1, dtype=gos.Signal)
    signal.Notify(sigq, syscall.SIGINT, syscall.SIGTERM)
    def watch():
        sig, ok = sigq.recv_()
        if not ok:
            return
        print("# %s" % sig, file=sys.stderr)
        cancel()
    go(watch)
    def stop():
        signal.Stop(sigq)
        sigq.close()
    return stop


@func
def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        optv, argv = getopt.getopt(argv, "hv", ["help", "verbose"])
    except getopt.GetoptError as e:
        print(e, file=sys.stderr)
        usage(sys.stderr)
        sys.exit(2)

    verbose = 0
    for opt, _ in optv:
        if opt in ("-v", "--verbose"):
            verbose += 1
        if opt in ("-h", "--help"):
            usage(sys.stdout)
            sys.exit(0)
    setup_logging(verbose)

    if len(argv) < 1:
        usage(sys.stderr)
        sys.exit(2)

    name = argv[0]
    if name == "help":
        return help(argv[1:])

    mod = commands.get(name)
    if mod is None:
        print('xcafm: unknown subcommand %s' % qq(name), file=sys.stderr)
        print("Run 'xcafm help' for usage.", file=sys.stderr)
        sys.exit(2)

    ctx, cancel = context.with_cancel(context.background())
    defer(cancel)
    defer(cancel_on_signal(cancel))
    return mod.main(ctx, argv)


if __name__ == '__main__':
    main()
