"""
Unit and regression test for the mcfiles module.
"""
import os
import pytest
import pandas as pd
from matchcover import mcfiles
from matchcover import mcgenerators
from matchcover.mcfiles import ScriptEvent
from matchcover.mcmatching import Matching
from matchcover.mcregularity import Partition
from matchcover.mcexceptions import ParseException


def _write(tmp_path, name, text):
    path = os.path.join(str(tmp_path), name)
    with open(path, 'w') as fh:
        fh.write(text)
    return path


def test_read_small_graph(SMALL_GRAPH):
    g = mcfiles.read_edge_list(SMALL_GRAPH)
    assert g.n == 6
    assert g.m == 7
    assert g.adjacency_query(0, 3)
    assert g.adjacency_query(5, 0)


def test_iter_edge_list_preserves_order(SMALL_GRAPH):
    items = list(mcfiles.iter_edge_list(SMALL_GRAPH))
    assert items[0] == (6, 7, False)
    assert items[1:] == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)]


def test_edge_list_round_trip(tmp_path):
    g = mcgenerators.gnp(12, 0.4, seed=4)
    path = os.path.join(str(tmp_path), 'g.txt')
    mcfiles.write_edge_list(path, g)
    assert mcfiles.read_edge_list(path) == g

    # explicit edge sequences keep duplicates under the multi flag
    mcfiles.write_edge_list(path, edges=[(1, 0), (0, 1)], n=3, multi=True)
    multi = mcfiles.read_edge_list(path)
    assert multi.multi
    assert multi.m == 2


@pytest.mark.parametrize('text, line', [('', 1),
                                        ('3\n', 1),
                                        ('3 1 single\n0 1\n', 1),
                                        ('3 2\n0 1\n', 2),
                                        ('3 1\n0 3\n', 2),
                                        ('3 1\n1 1\n', 2),
                                        ('3 1\n# comment\n0 x\n', 3),
                                        ('3 1\n0 1 2\n', 2)])
def test_edge_list_errors_carry_line_numbers(tmp_path, text, line):
    path = _write(tmp_path, 'bad.txt', text)
    with pytest.raises(ParseException) as info:
        mcfiles.read_edge_list(path)
    assert info.value.line_number == line


def test_matching_files(tmp_path):
    path = os.path.join(str(tmp_path), 'm.txt')
    m = Matching([(0, 1), (4, 2)])
    mcfiles.write_matching(path, m)
    assert mcfiles.read_matching(path) == m

    with pytest.raises(ParseException):
        mcfiles.read_matching(_write(tmp_path, 'shared.txt', 'matching 2\n0 1\n1 2\n'))
    with pytest.raises(ParseException):
        mcfiles.read_matching(_write(tmp_path, 'count.txt', 'matching 3\n0 1\n'))
    with pytest.raises(ParseException):
        mcfiles.read_matching(_write(tmp_path, 'header.txt', 'pairs 1\n0 1\n'))


def test_partition_files(tmp_path):
    path = os.path.join(str(tmp_path), 'p.txt')
    part = Partition([[4], [0, 1], [2, 3]], 5, 0.2)
    mcfiles.write_partition(path, part)
    assert mcfiles.read_partition(path, 0.2) == part

    with pytest.raises(ParseException):
        mcfiles.read_partition(_write(tmp_path, 'gap.txt', 'class 0:\nclass 2: 0 1\n'), 0.2)
    with pytest.raises(ParseException):
        mcfiles.read_partition(_write(tmp_path, 'twice.txt', 'class 0:\nclass 0: 1\n'), 0.2)


def test_read_small_script(SMALL_SCRIPT):
    events = mcfiles.read_script(SMALL_SCRIPT)
    assert len(events) == 8
    assert events[0] == ScriptEvent('+', 0, 1)
    assert events[4].op == '?'
    assert events[-1] == ScriptEvent('-', 0, 1)
    assert mcfiles.script_vertex_count(events) == 4

    with pytest.raises(ParseException):
        mcfiles.read_script(SMALL_SCRIPT, n=3)


def test_script_line_errors():
    with pytest.raises(ParseException):
        mcfiles.parse_script_line('* 0 1', 4)
    with pytest.raises(ParseException):
        mcfiles.parse_script_line('? 1', 4)
    with pytest.raises(ParseException) as info:
        mcfiles.parse_script_line('+ 0', 9)
    assert info.value.line_number == 9


def test_script_round_trip(tmp_path):
    events = [ScriptEvent('+', 0, 1), ScriptEvent('?', -1, -1), ScriptEvent('-', 1, 0)]
    path = os.path.join(str(tmp_path), 's.txt')
    mcfiles.write_script(path, events)
    back = mcfiles.read_script(path)
    assert [e.op for e in back] == ['+', '?', '-']
    assert (back[2].u, back[2].v) == (1, 0)


def test_tables(tmp_path):
    path = os.path.join(str(tmp_path), 't.csv')
    frame = pd.DataFrame({'step': [0, 1], 'matching': [1, 2]})
    mcfiles.write_table(path, frame)
    assert mcfiles.read_table(path).equals(frame)
    with open(path, 'rb') as fh:
        assert b'\r\n' not in fh.read()
