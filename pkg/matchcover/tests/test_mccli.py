"""
Unit and regression test for the mccli module.
"""
import os
import json
import pytest
from matchcover import mccli
from matchcover import mcfiles
from matchcover import mcgenerators
from matchcover.mcharness import STEP_COLUMNS


def _path(tmp_path, name):
    return os.path.join(str(tmp_path), name)


def _read_json(filename):
    with open(filename) as fh:
        return json.loads(fh.read())


def test_no_command_and_bad_options():
    assert mccli.main([]) == 2
    assert mccli.main(['stream']) == 2
    assert mccli.main(['verify', 'a', 'b']) == 2
    with pytest.raises(SystemExit):
        mccli.build_parser().parse_args(['--version'])


def test_parse_params():
    assert mccli.parse_params(['10', 'p=0.5'], ['n', 'p']) == {'n': '10', 'p': '0.5'}
    assert mccli.parse_params(['n=4'], ['n']) == {'n': '4'}
    with pytest.raises(mccli.UsageException):
        mccli.parse_params(['1', '2'], ['n'])
    with pytest.raises(mccli.UsageException):
        mccli.parse_params(['=3'], ['n'])


def test_gen_graphs_and_scripts(tmp_path):
    out = _path(tmp_path, 'cycle.txt')
    assert mccli.main(['gen', 'cycle', '6', '--out', out]) == 0
    assert mcfiles.read_edge_list(out).m == 6

    out = _path(tmp_path, 'gnp.txt')
    assert mccli.main(['gen', 'gnp', 'n=10', 'p=0.3', '--seed', '4', '--out', out]) == 0
    assert mcfiles.read_edge_list(out) == mcgenerators.gnp(10, 0.3, seed=4)

    out = _path(tmp_path, 'script.txt')
    assert mccli.main(['gen', 'script', 'insert-then-delete', '8', '0.5', '--seed', '1', '--out', out]) == 0
    events = mcfiles.read_script(out)
    assert len(events) % 2 == 0


@pytest.mark.parametrize('argv', [['gen', 'hypercube', '3'],
                                  ['gen', 'script'],
                                  ['gen', 'script', 'shuffle', '5'],
                                  ['gen', 'cycle', '2'],
                                  ['gen', 'cycle', '5', '6']])
def test_gen_usage_errors(argv, tmp_path):
    assert mccli.main(argv + ['--out', _path(tmp_path, 'x.txt')]) == 2


def test_gen_to_stdout(capsys):
    assert mccli.main(['gen', 'path', '3']) == 0
    assert capsys.readouterr().out.splitlines() == ['3 2', '0 1', '1 2']


def test_verify(tmp_path, SMALL_GRAPH):
    report = _path(tmp_path, 'verdict.json')
    assert mccli.main(['verify', SMALL_GRAPH, SMALL_GRAPH, '--alpha', '0', '--report', report]) == 0
    record = _read_json(report)
    assert record['passed'] is True
    assert record['schema'] == 1

    empty = _path(tmp_path, 'empty.txt')
    mcfiles.write_edge_list(empty, edges=[], n=6)
    assert mccli.main(['verify', SMALL_GRAPH, empty, '--alpha', '0', '--report', report]) == 1
    assert _read_json(report)['counterexample'] is not None

    assert mccli.main(['verify', SMALL_GRAPH, empty, '--alpha', '0.34', '--kind', 'hitting-set', '--report', report]) == 1
    assert mccli.main(['verify', SMALL_GRAPH, empty, '--alpha', '0.4', '--mode', 'sampled', '--samples', '20',
                       '--report', report]) in (0, 1)


def test_verify_input_errors(tmp_path, SMALL_GRAPH):
    report = _path(tmp_path, 'verdict.json')
    assert mccli.main(['verify', SMALL_GRAPH, SMALL_GRAPH, '--alpha', '1.0', '--report', report]) == 2

    other = _path(tmp_path, 'other.txt')
    mcfiles.write_edge_list(other, edges=[(0, 2)], n=6)
    assert mccli.main(['verify', SMALL_GRAPH, other, '--alpha', '0', '--report', report]) == 2

    bigger = _path(tmp_path, 'bigger.txt')
    mcfiles.write_edge_list(bigger, edges=[(0, 1)], n=7)
    assert mccli.main(['verify', SMALL_GRAPH, bigger, '--alpha', '0', '--report', report]) == 2

    broken = _path(tmp_path, 'broken.txt')
    with open(broken, 'w') as fh:
        fh.write('6 1\n0 x\n')
    assert mccli.main(['verify', SMALL_GRAPH, broken, '--alpha', '0', '--report', report]) == 2
    assert mccli.main(['verify', SMALL_GRAPH, _path(tmp_path, 'missing.txt'), '--alpha', '0']) == 2


@pytest.mark.parametrize('algorithm', ['greedy', 'regularity-cascade', 'cascade'])
def test_stream(tmp_path, SMALL_GRAPH, algorithm):
    report = _path(tmp_path, 'report.json')
    matching = _path(tmp_path, 'matching.txt')
    assert mccli.main(['stream', SMALL_GRAPH, '--algorithm', algorithm, '--oracle', '--no-time', '--alpha', '0.5',
                       '--report', report, '--matching-out', matching]) == 0
    record = _read_json(report)
    assert record['algorithm'] == algorithm
    assert record['mu_exact'] == 3
    assert 'wall_time' not in record
    assert len(mcfiles.read_matching(matching)) == record['size']


def test_stream_bad_input(tmp_path):
    broken = _path(tmp_path, 'broken.txt')
    with open(broken, 'w') as fh:
        fh.write('3 1\n0 3\n')
    assert mccli.main(['stream', broken, '--algorithm', 'greedy', '--report', _path(tmp_path, 'r.json')]) == 2


def test_dynamic(tmp_path, SMALL_SCRIPT):
    table = _path(tmp_path, 'steps.csv')
    summary = _path(tmp_path, 'summary.json')
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--oracle', '--seed', '1', '--out', table, '--summary', summary]) == 0
    frame = mcfiles.read_table(table)
    assert list(frame.columns) == ['schema'] + STEP_COLUMNS
    assert len(frame) == 8
    assert _read_json(summary)['stats']['updates'] == 7

    out = _path(tmp_path, 'run.json')
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--deamortized', '--budget', '2000', '--period', '4',
                       '--format', 'json', '--out', out, '--table', table]) == 0
    assert _read_json(out)['algorithm'] == 'deamortized'


def test_dynamic_usage_errors(tmp_path, SMALL_SCRIPT):
    out = _path(tmp_path, 'steps.csv')
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--deamortized', '--out', out]) == 2
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--deamortized', '--budget', '2', '--out', out]) == 2
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--n', '3', '--out', out]) == 2
    assert mccli.main(['dynamic', SMALL_SCRIPT, '--epsilon', '1.5', '--out', out]) == 2


def test_dynamic_missed_deadline_is_internal(tmp_path):
    script = _path(tmp_path, 'script.txt')
    assert mccli.main(['gen', 'script', 'insert-only', '10', '0.9', '--seed', '2', '--out', script]) == 0
    out = _path(tmp_path, 'steps.csv')
    assert mccli.main(['dynamic', script, '--deamortized', '--budget', '4', '--period', '2', '--out', out]) == 3


def test_cover(tmp_path):
    graph = _path(tmp_path, 'g.txt')
    mcfiles.write_edge_list(graph, mcgenerators.complete(16))
    out_dir = _path(tmp_path, 'cover')
    edges = _path(tmp_path, 'F.txt')
    report = _path(tmp_path, 'cover.json')
    assert mccli.main(['cover', graph, '--t', '2', '--gamma', '0.25', '--p-sample', '0.5', '--threshold', '0.3',
                       '--seed', '1', '--out-dir', out_dir, '--edges', edges, '--report', report]) == 0
    record = _read_json(report)
    assert record['schema'] == 1
    assert record['F'] == mcfiles.read_edge_list(edges).m
    assert os.path.exists(os.path.join(out_dir, 'pairs.csv'))

    assert mccli.main(['cover', graph, '--t', '4', '--gamma', '0.2', '--report', report]) == 2
    assert mccli.main(['cover', graph, '--gamma', '1.5', '--report', report]) == 2
