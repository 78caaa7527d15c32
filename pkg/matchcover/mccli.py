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
mccli is the batch command line of matchcover.

    matchcover gen KIND PARAMS...              write a graph or an update script
    matchcover stream INPUT                    run a streaming matcher, JSON report
    matchcover dynamic SCRIPT                  replay an update script, per-step CSV
    matchcover verify GRAPH COVER              check a matching cover or hitting set
    matchcover cover GRAPH                     build a matching cover

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 internal invariant violation.

"""

import argparse
import json
import sys
from contextlib import contextmanager

from .mcexceptions import MCException, ParseException, VertexRangeException
from .mccover import CoverParams, build_cover, verify_matching_cover, verify_hitting_set, cover_frame
from .mcdynamic import DynamicConfig, DynamicEngine, DeamortizedEngine
from .mcharness import run_stream, replay_script, json_default, STREAM_ALGORITHMS
from .mcscripts import gen_script, CoverAttacker, SCRIPT_KINDS
from .mcscripts import POSITIONAL_PARAMS as SCRIPT_PARAMS
from .mcgenerators import gen_graph, GENERATOR_KINDS
from .mcgenerators import POSITIONAL_PARAMS as GRAPH_PARAMS
from .mcstream import SinglePassStream
from .matchcover import version_full
from . import mcfiles
from . import mcio
from . import configs


EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# ........................................................................
#
class UsageException(MCException):
    """
    Raised for bad command-line input; maps to exit code 2.

    """
    pass


@contextmanager
def _usage_errors():
    """
    Re-raises every MCException of the enclosed block as a UsageException.

    """
    try:
        yield
    except UsageException:
        raise
    except MCException as e:
        raise UsageException(str(e))


def parse_params(tokens, positional):
    """
    Turns generator parameters into a dict. Tokens are either ``key=value``
    or positional values filled in the order of ``positional``.

    """
    params = {}
    index = 0
    for token in tokens:
        if '=' in token:
            key, _, value = token.partition('=')
            if not key:
                raise UsageException('Empty parameter name in "%s"' % (token))
            params[key] = value
        else:
            if index >= len(positional):
                raise UsageException('Too many positional parameters; expected at most %s' % (' '.join(positional)))
            params[positional[index]] = token
            index += 1
    return params


def _emit_json(record, filename):
    text = json.dumps(record, sort_keys=True, default=json_default)
    if filename is None or filename == '-':
        sys.stdout.write(text + '\n')
    else:
        with open(filename, 'w', newline='\n') as fh:
            fh.write(text + '\n')


def _cover_params(args, workers=None):
    with _usage_errors():
        return CoverParams(t=args.t, gamma=args.gamma, p_sample=args.p_sample,
                           good_density_threshold=args.threshold, seed=args.seed,
                           overflow='stop', workers=workers)


## ------------------------------------------------------------------------
## commands

def cmd_gen(args):
    if args.kind == 'script':
        if not args.params:
            raise UsageException('gen script needs a script kind, one of %s' % (', '.join(SCRIPT_KINDS)))
        kind = args.params[0]
        if kind not in SCRIPT_KINDS:
            raise UsageException('Unknown script kind %s; one of %s' % (kind, ', '.join(SCRIPT_KINDS)))
        params = parse_params(args.params[1:], SCRIPT_PARAMS[kind])
        with _usage_errors():
            events = gen_script(kind, params, seed=args.seed)
        mcfiles.write_script(args.out, events)
        mcio.status_message('wrote %i events' % (len(events)), args.verbose)
        return EXIT_OK

    if args.kind not in GENERATOR_KINDS:
        raise UsageException('Unknown generator %s; one of %s, script' % (args.kind, ', '.join(GENERATOR_KINDS)))
    params = parse_params(args.params, GRAPH_PARAMS[args.kind])
    with _usage_errors():
        g = gen_graph(args.kind, params, seed=args.seed)
    mcfiles.write_edge_list(args.out, g=g)
    mcio.status_message('wrote graph with n=%i m=%i' % (g.n, g.m), args.verbose)
    return EXIT_OK


def cmd_stream(args):
    stream = SinglePassStream.from_edge_list(args.input)
    params = _cover_params(args, workers=1)
    matching, report = run_stream(args.algorithm, stream, k=args.k, seed=args.seed, oracle=args.oracle,
                                  alpha=args.alpha, epsilon=args.epsilon, cover=args.cover, cover_params=params,
                                  instance={'input': args.input}, verbose=args.verbose)
    if args.matching_out is not None:
        mcfiles.write_matching(args.matching_out, matching)
    record = report.as_dict()
    if args.no_time:
        del record['wall_time']
    _emit_json(record, args.report)
    return EXIT_OK


def cmd_dynamic(args):
    events = mcfiles.read_script(args.script, n=args.n)
    n = args.n if args.n is not None else max(1, mcfiles.script_vertex_count(events))

    with _usage_errors():
        config = DynamicConfig(tau=args.tau, epsilon=args.epsilon, period=args.period,
                               cover_params=_cover_params(args, workers=1), step_budget=args.budget, seed=args.seed)
        if args.deamortized:
            if args.budget is None:
                raise UsageException('--deamortized needs --budget')
            engine = DeamortizedEngine(n, config=config, verbose=args.verbose)
        else:
            engine = DynamicEngine(n, config=config, verbose=args.verbose)
    adversary = CoverAttacker(args.attack, seed=args.seed) if args.attack else None

    frame, report = replay_script(engine, events, oracle=args.oracle, adversary=adversary, verbose=args.verbose)
    frame.insert(0, 'schema', configs.SCHEMA_VERSION)

    if args.format == 'csv':
        mcfiles.write_table(args.out, frame)
        if args.summary is not None:
            _emit_json(report.as_dict(), args.summary)
    else:
        if args.table is not None:
            mcfiles.write_table(args.table, frame)
        _emit_json(report.as_dict(), args.out)
    return EXIT_OK


def cmd_verify(args):
    if not (0.0 <= args.alpha < 1.0):
        raise UsageException('alpha must be in [0, 1), got %s' % (str(args.alpha)))
    g = mcfiles.read_edge_list(args.graph)
    h = mcfiles.read_edge_list(args.cover)
    if h.n != g.n:
        raise UsageException('Cover has n=%i but the graph has n=%i' % (h.n, g.n))
    missing = h.edge_set() - g.edge_set()
    if missing:
        raise UsageException('Cover edge %s is not in the graph' % (str(min(missing))))

    with _usage_errors():
        if args.kind == 'hitting-set':
            verdict = verify_hitting_set(g, h, args.alpha, mode=args.mode, samples=args.samples, seed=args.seed)
        else:
            verdict = verify_matching_cover(g, h, args.alpha, mode=args.mode, samples=args.samples, seed=args.seed)

    record = verdict.as_dict()
    record['schema'] = configs.SCHEMA_VERSION
    record['alpha'] = args.alpha
    _emit_json(record, args.report)
    if not verdict:
        mcio.warning_message('%s check failed at %s' % (args.kind, str(verdict.counterexample)))
        return EXIT_FAIL
    return EXIT_OK


def cmd_cover(args):
    g = mcfiles.read_edge_list(args.graph)
    params = _cover_params(args)
    if g.n < params.min_vertices():
        raise UsageException('cover needs n >= t/gamma = %.2f, got n=%i' % (params.min_vertices(), g.n))
    report = build_cover(g, params, verbose=args.verbose)
    if args.out_dir is not None:
        report.write(args.out_dir)
    if args.edges is not None:
        mcfiles.write_edge_list(args.edges, edges=sorted(report.F), n=g.n)
    summary = cover_frame(report).iloc[0].to_dict()
    summary['schema'] = configs.SCHEMA_VERSION
    _emit_json(summary, args.report)
    return EXIT_OK


## ------------------------------------------------------------------------
## parser

def _add_cover_options(parser):
    group = parser.add_argument_group('cover construction')
    group.add_argument('--t', type=int, default=None, help='minimum number of partition classes (default %i)' % (configs.DEFAULT_T))
    group.add_argument('--gamma', type=float, default=None, help='regularity parameter (default %s)' % (str(configs.DEFAULT_GAMMA)))
    group.add_argument('--p-sample', type=float, default=None, help='good-pair sampling probability (default min(1, 10/ln n))')
    group.add_argument('--threshold', type=float, default=None, help='good-pair density threshold (default 8 gamma)')


def build_parser():
    parser = argparse.ArgumentParser(prog='matchcover', description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version', version='%(prog)s ' + version_full())
    sub = parser.add_subparsers(dest='command')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=None, help='random seed')
    common.add_argument('--verbose', '-v', action='store_true', help='status messages on stderr')

    p = sub.add_parser('gen', parents=[common], help='generate a graph or an update script')
    p.add_argument('kind', help='generator (%s) or "script"' % (', '.join(GENERATOR_KINDS)))
    p.add_argument('params', nargs='*', help='positional values or key=value pairs')
    p.add_argument('--out', '-o', default='-', help='output file (default stdout)')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('stream', parents=[common], help='run a single-pass streaming matcher')
    p.add_argument('input', help="edge-list file, '-' for stdin")
    p.add_argument('--algorithm', '-a', choices=STREAM_ALGORITHMS, default='regularity-cascade')
    p.add_argument('--k', type=int, default=4, help='reduction factor')
    p.add_argument('--alpha', type=float, default=None, help='cover parameter of the cascade algorithm')
    p.add_argument('--epsilon', type=float, default=0.05, help='slack of optguess')
    p.add_argument('--cover', choices=['identity', 'brute', 'regularity'], default='identity',
                   help='cover function of cascade and optguess')
    p.add_argument('--oracle', action='store_true', help='also compute the exact maximum matching')
    p.add_argument('--matching-out', default=None, help='write the matching to this file')
    p.add_argument('--report', default='-', help='JSON report file (default stdout)')
    p.add_argument('--no-time', action='store_true', help='leave wall_time out of the report')
    _add_cover_options(p)
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser('dynamic', parents=[common], help='replay an update script')
    p.add_argument('script', help="update script, '-' for stdin")
    p.add_argument('--n', type=int, default=None, help='number of vertices (default: from the script)')
    p.add_argument('--tau', type=float, default=None, help='density threshold divisor (default %s)' % (str(configs.DEFAULT_TAU)))
    p.add_argument('--epsilon', type=float, default=None, help='slack of the lazy matcher (default %s)' % (str(configs.DEFAULT_EPSILON)))
    p.add_argument('--period', type=int, default=None, help='updates between cover rebuilds')
    p.add_argument('--deamortized', action='store_true', help='use the worst-case engine')
    p.add_argument('--budget', type=int, default=None, help='per-update work allowance of the worst-case engine')
    p.add_argument('--oracle', action='store_true', help='check every step against the exact maximum matching')
    p.add_argument('--attack', type=int, default=0, help='adaptive cover-attacking deletions')
    p.add_argument('--format', choices=['csv', 'json'], default='csv', help='per-step CSV or JSON summary on --out')
    p.add_argument('--out', '-o', default='-', help='output file (default stdout)')
    p.add_argument('--summary', default=None, help='JSON summary file (csv format)')
    p.add_argument('--table', default=None, help='per-step CSV file (json format)')
    _add_cover_options(p)
    p.set_defaults(func=cmd_dynamic)

    p = sub.add_parser('verify', parents=[common], help='verify a matching cover or hitting set')
    p.add_argument('graph', help='edge-list file of G')
    p.add_argument('cover', help='edge-list file of the candidate H')
    p.add_argument('--alpha', type=float, required=True, help='additive slack, in [0, 1)')
    p.add_argument('--kind', choices=['matching-cover', 'hitting-set'], default='matching-cover')
    p.add_argument('--mode', choices=['exhaustive', 'sampled'], default='exhaustive')
    p.add_argument('--samples', type=int, default=None, help='candidate pairs in sampled mode (default %i)' % (configs.VERIFY_SAMPLES))
    p.add_argument('--report', default='-', help='JSON verdict file (default stdout)')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('cover', parents=[common], help='build a matching cover')
    p.add_argument('graph', help='edge-list file')
    p.add_argument('--out-dir', default=None, help='write partition, pair table and F1/F2/F3 here')
    p.add_argument('--edges', default=None, help='write the cover as an edge list')
    p.add_argument('--report', default='-', help='JSON summary file (default stdout)')
    _add_cover_options(p)
    p.set_defaults(func=cmd_cover)

    return parser


def main(argv=None):
    """
    Entry point of the ``matchcover`` console script. Returns the exit code.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    try:
        return args.func(args)
    except (UsageException, ParseException, VertexRangeException) as e:
        mcio.exception_message(str(e), e, raise_exception=False)
        return EXIT_USAGE
    except MCException as e:
        mcio.exception_message(str(e), e, raise_exception=False)
        return EXIT_INTERNAL
    except OSError as e:
        mcio.exception_message('%s: %s' % (getattr(e, 'filename', ''), e.strerror or str(e)), e, raise_exception=False)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
