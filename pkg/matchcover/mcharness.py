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
mcharness runs the streaming and dynamic algorithms end to end and collects
RunReport records for the command line.

"""

import json
import math
import time

import numpy as np
import pandas as pd

from .mcexceptions import MCException
from .mcgraph import Graph
from .mcmatching import matching_size
from .mccover import CoverParams, default_alpha
from .mcstream import (SinglePassStream, RegularityStreamMatcher, OptGuessStreamMatcher, BufferCascade,
                       as_stream, identity_cover, brute_cover, RegularityCoverFn)
from .mcmatching import greedy_stream_matching, max_matching_general
from .mcdynamic import DeamortizedEngine
from . import mcio
from . import mcutils
from . import configs


STREAM_ALGORITHMS = ['greedy', 'regularity-cascade', 'optguess', 'cascade']
COVER_FUNCTIONS = {'identity': identity_cover, 'brute': brute_cover}

STEP_COLUMNS = ['step', 'op', 'u', 'v', 'm', 'regime', 'matching', 'mu_exact', 'ratio', 'work_units', 'lazy_units', 'status']


# ........................................................................
#
class RunReport:
    """
    Summary of one run.

    ``ratio`` is size / mu_exact when the exact value is known and positive.

    """

    def __init__(self, algorithm, instance, size, mu_exact=None, peak_bits=None, wall_time=0.0, stats=None, seed=None):
        self.algorithm = algorithm
        self.instance = instance
        self.size = int(size)
        self.mu_exact = None if mu_exact is None else int(mu_exact)
        self.peak_bits = peak_bits
        self.wall_time = float(wall_time)
        self.stats = {} if stats is None else stats
        self.seed = seed

    @property
    def ratio(self):
        if self.mu_exact is None or self.mu_exact == 0:
            return None
        return self.size / float(self.mu_exact)

    def as_dict(self):
        return {'schema': configs.SCHEMA_VERSION,
                'algorithm': self.algorithm,
                'instance': self.instance,
                'size': self.size,
                'mu_exact': self.mu_exact,
                'ratio': self.ratio,
                'peak_bits': self.peak_bits,
                'wall_time': self.wall_time,
                'seed': self.seed,
                'stats': self.stats}

    def to_json(self, include_time=True):
        record = self.as_dict()
        if not include_time:
            del record['wall_time']
        return json.dumps(record, sort_keys=True, default=json_default)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: RUN REPORT %s (size=%i, mu=%s)" % (self.algorithm, self.size, str(self.mu_exact))


def json_default(value):
    """
    json.dumps hook for numpy scalars and sets.

    """
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    raise TypeError('%s is not JSON serializable' % (type(value).__name__))


def _recording(stream, sink):
    for (u, v) in stream:
        sink.append((u, v))
        yield (u, v)


## ------------------------------------------------------------------------
## streaming

def run_stream(algorithm, stream, n=None, k=4, seed=None, oracle=False, alpha=None, epsilon=0.05,
               cover='identity', cover_params=None, instance=None, verbose=False):
    """
    Runs one streaming algorithm over ``stream``.

    Parameters
    -----------
    algorithm : str
        One of STREAM_ALGORITHMS

    stream : SinglePassStream, Graph or iterable of edges

    n : int
        Number of vertices; read from the stream when declared

    k : int
        Reduction factor

    seed : int

    oracle : bool
        Also compute the exact maximum matching of the streamed graph

    alpha : float
        Cover parameter of the 'cascade' algorithm. Default is
        default_alpha(gamma).

    epsilon : float
        Slack of 'optguess'

    cover : str
        'identity', 'brute' or 'regularity'; cover function of 'cascade' and
        'optguess'

    Returns
    --------
    tuple
        (Matching, RunReport)

    """
    mcutils.validate_keyword_option(algorithm, STREAM_ALGORITHMS, 'algorithm')
    mcutils.validate_keyword_option(cover, ['identity', 'brute', 'regularity'], 'cover')
    stream = as_stream(stream, n=n)
    if n is None:
        n = stream.n
    if n is None:
        raise MCException('run_stream needs the number of vertices')
    m = stream.m if stream.m is not None else mcutils.choose2(n)
    if cover_params is None:
        cover_params = CoverParams(overflow='stop', workers=1, seed=seed)
    cover_fn = RegularityCoverFn(cover_params, verbose=verbose) if cover == 'regularity' else COVER_FUNCTIONS[cover]

    seen = []
    edges = _recording(stream, seen) if oracle else stream
    start = time.time()
    stats = {}
    peak_bits = None

    if algorithm == 'greedy':
        matching = greedy_stream_matching(edges)
        peak_bits = configs.NAIVE_BITS_PER_EDGE * len(matching)
    elif algorithm == 'regularity-cascade':
        matcher = RegularityStreamMatcher(n, k, params=cover_params, m=m, seed=seed, verbose=verbose)
        matching = matcher.run(edges)
        stats = matcher.report
        peak_bits = stats['peak_bits']
    elif algorithm == 'optguess':
        matcher = OptGuessStreamMatcher(n, k, epsilon, cover_fn=cover_fn, m=m, seed=seed, verbose=verbose)
        matching = matcher.run(edges)
        stats = matcher.report
        peak_bits = stats['peak_bits']
    else:
        if alpha is None:
            alpha = default_alpha(cover_params.gamma)
        cascade = BufferCascade(n, m, k, alpha, cover_fn, seed=seed, verbose=verbose)
        for (u, v) in edges:
            cascade.feed(u, v)
        matching = max_matching_general(Graph(n, edges=sorted(cascade.finalize())))
        stats = cascade.stats()
        peak_bits = cascade.peak_bits
    wall = time.time() - start

    mu = None
    if oracle:
        streamed = Graph(n, multi=True)
        for (u, v) in seen:
            streamed.insert_edge(u, v)
        matching.validate(streamed)
        mu = matching_size(streamed)
    stats['arrivals'] = stream.arrivals

    report = RunReport(algorithm, instance if instance is not None else {'n': n, 'm': m},
                       len(matching), mu_exact=mu, peak_bits=peak_bits, wall_time=wall, stats=stats, seed=seed)
    mcio.status_message('%s: |M|=%i%s' % (algorithm, len(matching), '' if mu is None else ' (mu=%i)' % (mu)), verbose)
    return matching, report


## ------------------------------------------------------------------------
## dynamic replay

def epsilon_total(engine, mu, alpha=None):
    """
    Approximation slack the engine promises at this step: epsilon in the
    sparse regime, epsilon + alpha n / mu in the dense regime.

    """
    eps = engine.config.epsilon
    if engine.regime != 'dense' or mu == 0:
        return eps
    if alpha is None:
        alpha = engine.config.cover_params.alpha_value()
    return eps + alpha * engine.n / float(mu)


def replay_script(engine, events, oracle=False, adversary=None, check=True, verbose=False):
    """
    Replays update events through an engine.

    Parameters
    -----------
    engine : DynamicEngine or DeamortizedEngine

    events : iterable of ScriptEvent
        '?' events add a row without an update

    oracle : bool
        Compute the exact maximum matching after every step and check the
        approximation guarantee

    adversary : callable, optional
        adversary(state, event) returns the event to apply instead

    check : bool
        Run engine.check_invariants() after every step

    Returns
    --------
    tuple
        (pandas.DataFrame of per-step rows, RunReport)

    Raises
    --------
    MCException
        If an invariant or, with the oracle on, the approximation guarantee is
        violated

    """
    rows = []
    start = time.time()
    for step, event in enumerate(events):
        if adversary is not None and event.op != '?':
            event = adversary(engine.state(), event)
        if event.op == '?':
            status = 'query'
        else:
            engine.update(event.op, event.u, event.v)
            status = engine.last_status
        matching = engine.matching
        if check:
            engine.check_invariants()

        mu = None
        ratio = None
        if oracle:
            mu = matching_size(engine.g)
            if mu > 0:
                ratio = len(matching) / float(mu)
                if len(matching) < (1.0 - epsilon_total(engine, mu)) * mu - configs.FLOAT_TOL:
                    raise MCException('step %i: matching of size %i is below (1 - eps_total) of mu=%i' % (step, len(matching), mu))

        rows.append({'step': step, 'op': event.op, 'u': event.u, 'v': event.v, 'm': engine.g.m, 'regime': engine.regime,
                     'matching': len(matching), 'mu_exact': mu, 'ratio': ratio,
                     'work_units': engine.last_units if status != 'query' else 0,
                     'lazy_units': engine.last_lazy_units if status != 'query' else 0, 'status': status})
        mcio.status_message('step %i: %s %i %i -> |M|=%i' % (step, event.op, event.u, event.v, len(matching)), verbose)

    frame = pd.DataFrame(rows, columns=STEP_COLUMNS)
    wall = time.time() - start
    steps = len(frame)
    stats = {'steps': steps,
             'updates': engine.update_count,
             'regime_switches': engine.regime_switches,
             'work_units': engine.work_units,
             'lazy_units': engine.lazy_units,
             'max_step_units': int(frame['work_units'].max()) if steps else 0,
             'mean_step_units': float(frame['work_units'].mean()) if steps else 0.0,
             'max_total_units': int(step_units(frame).max()) if steps else 0,
             'final_regime': engine.regime,
             'deamortized': isinstance(engine, DeamortizedEngine)}
    final_mu = None
    if oracle and steps:
        final_mu = frame['mu_exact'].iloc[-1]
        final_mu = None if final_mu is None or (isinstance(final_mu, float) and math.isnan(final_mu)) else int(final_mu)
    report = RunReport('deamortized' if stats['deamortized'] else 'dynamic', {'n': engine.n, 'steps': steps},
                       len(engine.matching), mu_exact=final_mu, wall_time=wall, stats=stats, seed=engine.config.seed)
    return frame, report


def step_units(frame):
    """
    Total work of every row, foreground and background together.

    """
    return frame['work_units'] + frame['lazy_units']


def amortized_average(frame):
    """
    Mean total work (``work_units + lazy_units``) per applied update of a
    replay table.

    """
    applied = frame[frame['status'] == 'applied']
    if len(applied) == 0:
        return 0.0
    return float(step_units(applied).sum()) / len(applied)


def stream_from_file(filename):
    return SinglePassStream.from_edge_list(filename)
