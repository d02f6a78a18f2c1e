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
"""Package xcafm.cli is top-level home for the xcafm command-line tool.

- load, loads, dump and dumps convert models from and to CaFM JSON
  documents. See 'xcafm help cafm' for the format.
- report_text formats analysis report for humans.
"""

from __future__ import print_function, division, absolute_import

from xcafm import formula
from xcafm.formula import ParseError, Const, TRUE
from xcafm.model import CaFM, ModelError

import json
from golang.gcompat import qq


# DocumentError is raised when a CaFM document cannot be loaded or saved.
class DocumentError(ValueError): pass


# loads decodes CaFM document from text.
#
# name is used as prefix in error messages.
def loads(text, name='<string>'):
    def bad(msg):
        raise DocumentError('%s: %s' % (name, msg))
    try:
        doc = json.loads(text)
    except ValueError as e:
        bad('invalid json: %s' % e)
    except RecursionError:
        bad('invalid json: nesting too deep')
    if not isinstance(doc, dict):
        bad('document is not an object')

    def names(field, required):
        if field not in doc:
            if required:
                bad('missing field %s' % qq(field))
            return []
        v = doc[field]
        if not isinstance(v, list) or not all(isinstance(_, str) for _ in v):
            bad('field %s is not a list of names' % qq(field))
        return v

    contexts = names('contexts', True)
    features = names('features', True)
    optional = names('optional', False)
    text = doc.get('formula')
    if not isinstance(text, str):
        bad('field "formula" is missing or is not a string')
    metadata = doc.get('metadata', {})
    if not isinstance(metadata, dict):
        bad('field "metadata" is not an object')

    if text.strip() == '':
        phi = TRUE
    else:
        try:
            phi = formula.parse(text)
        except ParseError as e:
            bad('formula: %s' % e)
    try:
        return CaFM(contexts, features, optional, phi, metadata)
    except (ModelError, ValueError) as e:
        bad(str(e))

# load loads CaFM document from file at path.
def load(path):
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise DocumentError('%s: invalid utf-8: %s' % (path, e))
    return loads(text, name=path)


# dumps encodes model m into CaFM document.
#
# Output is stable: the same model always gives the same bytes.
def dumps(m):
    phi = m.formula
    if phi is TRUE or phi == TRUE:
        text = ''
    else:
        for node in formula.postorder(phi):
            if type(node) is Const:
                raise DocumentError('cannot save formula with truth constants: %s' % phi)
        text = str(phi)
    doc = {
        'contexts': list(m.contexts),
        'features': list(m.features),
        'optional': list(m.optional),
        'formula':  text,
        'metadata': m.metadata,
    }
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + '\n'

# dump saves model m as CaFM document to file at path.
def dump(m, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(m))


# report_text returns human-readable text of analysis report r.
def report_text(r):
    lines = []
    def emit(label, value):
        lines.append('%-16s %s' % (label + ':', value))
    def nameset(v):
        return '{%s}' % ', '.join(str(_) for _ in v)

    emit('analysis', r.kind)
    approach = r.approach
    if r.winner is not None:
        approach += ' (%s won)' % r.winner
    emit('approach', approach)
    emit('verdict',  r.verdict())
    if r.kind == 'voidness' and r.void:
        emit('void context', nameset(r.witness))
    if r.dead is not None:
        emit('dead', nameset(r.dead))
    if r.false_optional is not None:
        emit('false optional', nameset(r.false_optional))
    if r.redundant is not None:
        emit('redundant', nameset(r.redundant))
    emit('wall time', '%.3fs' % r.wall_time)
    emit('sat calls', r.stats['sat_calls'])
    if r.stats['refinement_count']:
        emit('refinements', r.stats['refinement_count'])
    return '\n'.join(lines) + '\n'
