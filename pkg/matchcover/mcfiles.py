##                  _       _
##  _ __ ___   __ _| |_ ___| |__   ___ _____   _____ _ __
## | '_ ` _ \ / _` | __/ __| '_ \ / __/ _ \ \ / / _ \ '__|
## | | | | | | (_| | || (__| | | | (_| (_) \ V /  __/ |
## |_| |_| |_|\__,_|\__\___|_| |_|\___\___/ \_/ \___|_|
##
## Matching covers, streaming and fully dynamic matching
## Copyright 2024 - 2026
##

"""
mcfiles reads and writes the plain-text formats used by the command line.

    edge list     header "n m [multi]", then one "u v" per line (0-indexed)
    matching      header "matching k", then one "u v" per line
    partition     one line per class, "class <id>: v v v ..."
    update script "+ u v" (insert), "- u v" (delete), "?" (size report)

Blank lines and lines starting with '#' are ignored everywhere. Format
errors raise ParseException with the offending line number. A filename of
'-' means stdin (readers) or stdout (writers).

"""

import os
import sys
from collections import namedtuple
from contextlib import contextmanager

import pandas as pd

from .mcexceptions import MCException, ParseException
from .mcgraph import Graph, normalize_edge
from .mcmatching import Matching
from .mcregularity import Partition


ScriptEvent = namedtuple('ScriptEvent', ['op', 'u', 'v'])


@contextmanager
def _open_read(filename):
    if filename == '-':
        yield sys.stdin
    else:
        with open(filename, 'r') as fh:
            yield fh


@contextmanager
def _open_write(filename):
    if filename == '-':
        yield sys.stdout
    else:
        with open(filename, 'w', newline='\n') as fh:
            yield fh


def _content_lines(handle):
    for number, raw in enumerate(handle, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        yield number, line


def _parse_int(token, number, what):
    try:
        return int(token)
    except ValueError:
        raise ParseException('%s "%s" is not an integer' % (what, token), number)


def _parse_pair(tokens, number, n=None):
    if len(tokens) != 2:
        raise ParseException('expected "u v", got %i fields' % (len(tokens)), number)
    u = _parse_int(tokens[0], number, 'vertex')
    v = _parse_int(tokens[1], number, 'vertex')
    if u == v:
        raise ParseException('self-loop (%i, %i)' % (u, v), number)
    if n is not None and (min(u, v) < 0 or max(u, v) >= n):
        raise ParseException('vertex outside [0, %i) in (%i, %i)' % (n, u, v), number)
    return u, v


## ------------------------------------------------------------------------
## edge lists

def _parse_header(number, line):
    tokens = line.split()
    if len(tokens) not in (2, 3) or (len(tokens) == 3 and tokens[2] != 'multi'):
        raise ParseException('header must be "n m [multi]"', number)
    n = _parse_int(tokens[0], number, 'n')
    m = _parse_int(tokens[1], number, 'm')
    if n < 0 or m < 0:
        raise ParseException('n and m must be non-negative', number)
    return n, m, len(tokens) == 3


def iter_edge_list(filename):
    """
    Streams an edge-list file strictly in file order.

    The first item yielded is the header tuple (n, m, multi); every later item
    is an edge (u, v). The declared edge count is checked when the file ends.

    """
    with _open_read(filename) as handle:
        lines = _content_lines(handle)
        try:
            number, line = next(lines)
        except StopIteration:
            raise ParseException('missing header', 1)
        n, m, multi = _parse_header(number, line)
        yield (n, m, multi)

        seen = 0
        last = number
        for number, line in lines:
            last = number
            yield _parse_pair(line.split(), number, n)
            seen += 1
        if seen != m:
            raise ParseException('header declares %i edges, file has %i' % (m, seen), last)


def read_edge_list(filename):
    """
    Reads an edge-list file into a Graph.

    Parameters
    -----------
    filename : str
        Path or '-' for stdin

    Returns
    --------
    Graph

    """
    items = iter_edge_list(filename)
    n, m, multi = next(items)
    g = Graph(n, multi=multi)
    for (u, v) in items:
        g.insert_edge(u, v)
    return g


def write_edge_list(filename, g=None, edges=None, n=None, multi=None):
    """
    Writes a graph, or an explicit edge sequence on n vertices, as an edge list.

    """
    if g is not None:
        n = g.n
        edges = g.edge_list()
        multi = g.multi if multi is None else multi
    elif edges is None or n is None:
        raise MCException('write_edge_list needs a graph or both edges and n')
    edges = [normalize_edge(u, v) for (u, v) in edges]
    header = '%i %i%s' % (n, len(edges), ' multi' if multi else '')
    with _open_write(filename) as fh:
        fh.write(header + '\n')
        for (u, v) in edges:
            fh.write('%i %i\n' % (u, v))


## ------------------------------------------------------------------------
## matchings

def write_matching(filename, matching):
    with _open_write(filename) as fh:
        fh.write('matching %i\n' % (len(matching)))
        for (u, v) in matching:
            fh.write('%i %i\n' % (u, v))


def read_matching(filename):
    with _open_read(filename) as handle:
        lines = _content_lines(handle)
        try:
            number, line = next(lines)
        except StopIteration:
            raise ParseException('missing "matching k" header', 1)
        tokens = line.split()
        if len(tokens) != 2 or tokens[0] != 'matching':
            raise ParseException('header must be "matching k"', number)
        k = _parse_int(tokens[1], number, 'k')

        matching = Matching()
        for number, line in lines:
            u, v = _parse_pair(line.split(), number)
            try:
                matching.add(u, v)
            except MCException as e:
                raise ParseException(str(e), number)
        if len(matching) != k:
            raise ParseException('header declares %i edges, file has %i' % (k, len(matching)), number)
    return matching


## ------------------------------------------------------------------------
## partitions

def write_partition(filename, partition):
    with _open_write(filename) as fh:
        for line in partition.to_lines():
            fh.write(line + '\n')


def read_partition(filename, gamma, t_min=1):
    """
    Reads a partition file. The number of vertices is the number of listed
    vertices.

    """
    classes = {}
    with _open_read(filename) as handle:
        for number, line in _content_lines(handle):
            head, _, body = line.partition(':')
            tokens = head.split()
            if len(tokens) != 2 or tokens[0] != 'class':
                raise ParseException('expected "class <id>: v v v"', number)
            index = _parse_int(tokens[1], number, 'class id')
            if index in classes:
                raise ParseException('class %i listed twice' % (index), number)
            classes[index] = [_parse_int(tok, number, 'vertex') for tok in body.split()]

    if sorted(classes) != list(range(len(classes))):
        raise ParseException('class ids must be 0..k without gaps', 1)
    ordered = [classes[i] for i in range(len(classes))]
    n = sum(len(c) for c in ordered)
    return Partition(ordered, n, gamma, t_min=t_min)


## ------------------------------------------------------------------------
## update scripts

def parse_script_line(line, number, n=None):
    tokens = line.split()
    if tokens[0] == '?':
        if len(tokens) != 1:
            raise ParseException('"?" takes no arguments', number)
        return ScriptEvent('?', -1, -1)
    if tokens[0] not in ('+', '-'):
        raise ParseException('script lines start with "+", "-" or "?", got "%s"' % (tokens[0]), number)
    u, v = _parse_pair(tokens[1:], number, n)
    return ScriptEvent(tokens[0], u, v)


def iter_script(filename, n=None):
    with _open_read(filename) as handle:
        for number, line in _content_lines(handle):
            yield parse_script_line(line, number, n)


def read_script(filename, n=None):
    return list(iter_script(filename, n))


def write_script(filename, events):
    with _open_write(filename) as fh:
        for event in events:
            if event.op == '?':
                fh.write('?\n')
            else:
                fh.write('%s %i %i\n' % (event.op, event.u, event.v))


def script_vertex_count(events):
    """
    Smallest n that holds every vertex named in ``events``.

    """
    top = -1
    for event in events:
        if event.op != '?':
            top = max(top, event.u, event.v)
    return top + 1


## ------------------------------------------------------------------------
## tables and report directories

def write_table(filename, frame):
    """
    Writes a pandas DataFrame as CSV with LF line endings.

    """
    if filename == '-':
        frame.to_csv(sys.stdout, index=False, lineterminator='\n')
    else:
        frame.to_csv(filename, index=False, lineterminator='\n')


def read_table(filename):
    return pd.read_csv(filename)


def write_cover_report(directory, report):
    """
    Writes a CoverReport to ``directory``: partition.txt, pairs.csv and the
    edge lists F1.txt, F2.txt, F3.txt.

    """
    os.makedirs(directory, exist_ok=True)
    n = report.partition.n
    write_partition(os.path.join(directory, 'partition.txt'), report.partition)
    write_table(os.path.join(directory, 'pairs.csv'), report.pair_frame())
    write_edge_list(os.path.join(directory, 'F1.txt'), edges=sorted(report.F1), n=n)
    write_edge_list(os.path.join(directory, 'F2.txt'), edges=sorted(report.F2), n=n)
    write_edge_list(os.path.join(directory, 'F3.txt'), edges=sorted(report.F3), n=n)

