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
mcscripts generates update scripts for the dynamic engines, and the adaptive
CoverAttacker adversary.

    insert-only         n [p]          edges of G(n, p) inserted in random order
    insert-then-delete  n [p]          the same, then every edge deleted in
                                       random order (2m events)
    delete-heavy        n [p] [length] G(n, p) inserted, then length events
                                       that delete with probability 0.8
    oscillating         n [tau] [length]
                                       fill to the middle of the hysteresis band
                                       (n^2 / 2tau, n^2 / tau), then alternate
                                       inserts and deletes inside it
    random              n [length] [p_insert]
                                       uniformly random inserts and deletes

"""

import math

from .mcexceptions import MCException
from .mcfiles import ScriptEvent
from .mcgenerators import gnp
from . import mcutils
from . import configs


SCRIPT_KINDS = ['insert-only', 'insert-then-delete', 'delete-heavy', 'oscillating', 'random']

POSITIONAL_PARAMS = {'insert-only': ['n', 'p'],
                     'insert-then-delete': ['n', 'p'],
                     'delete-heavy': ['n', 'p', 'length'],
                     'oscillating': ['n', 'tau', 'length'],
                     'random': ['n', 'length', 'p_insert']}


class _EdgePool:
    """
    Present/absent edge bookkeeping with O(1) uniform picks.

    """

    def __init__(self, n):
        self.n = n
        self.present = []
        self.index = {}

    def add(self, e):
        self.index[e] = len(self.present)
        self.present.append(e)

    def remove(self, e):
        i = self.index.pop(e)
        last = self.present.pop()
        if i < len(self.present):
            self.present[i] = last
            self.index[last] = i

    def __contains__(self, e):
        return e in self.index

    def __len__(self):
        return len(self.present)

    def random_present(self, rng):
        return self.present[int(rng.integers(len(self.present)))]

    def random_absent(self, rng):
        total = mcutils.choose2(self.n)
        if len(self.present) >= total:
            return None
        while True:
            u, v = sorted(int(x) for x in rng.choice(self.n, size=2, replace=False))
            if (u, v) not in self.index:
                return (u, v)


def _shuffled_gnp_edges(n, p, rng):
    edges = gnp(n, p, seed=rng).edges()
    return [edges[i] for i in rng.permutation(len(edges))]


def gen_script(kind, params, seed=None):
    """
    Builds an update script.

    Parameters
    -----------
    kind : str
        One of SCRIPT_KINDS

    params : dict
        Script parameters (see module docstring); values may be strings

    seed : int

    Returns
    --------
    list of ScriptEvent

    """
    mcutils.validate_keyword_option(kind, SCRIPT_KINDS, 'kind')
    rng = mcutils.make_rng(seed)

    def get(name, default, cast):
        value = params.get(name, default)
        if value is None:
            raise MCException('Script %s needs parameter %s' % (kind, name))
        try:
            return cast(value)
        except (TypeError, ValueError):
            raise MCException('Script %s: parameter %s=%s is not a valid %s' % (kind, name, str(value), cast.__name__))

    n = get('n', None, int)
    if n < 2:
        raise MCException('Scripts need n >= 2, got %i' % (n))

    if kind in ('insert-only', 'insert-then-delete'):
        edges = _shuffled_gnp_edges(n, get('p', 0.5, float), rng)
        events = [ScriptEvent('+', u, v) for (u, v) in edges]
        if kind == 'insert-then-delete':
            events += [ScriptEvent('-', edges[i][0], edges[i][1]) for i in rng.permutation(len(edges))]
        return events

    pool = _EdgePool(n)
    events = []

    def insert(e):
        pool.add(e)
        events.append(ScriptEvent('+', e[0], e[1]))

    def delete(e):
        pool.remove(e)
        events.append(ScriptEvent('-', e[0], e[1]))

    if kind == 'delete-heavy':
        for e in _shuffled_gnp_edges(n, get('p', 0.5, float), rng):
            insert(e)
        for _ in range(get('length', len(pool), int)):
            if len(pool) and rng.random() < 0.8:
                delete(pool.random_present(rng))
            else:
                e = pool.random_absent(rng)
                if e is not None:
                    insert(e)
        return events

    if kind == 'oscillating':
        tau = get('tau', configs.DEFAULT_TAU, float)
        low = n * n / (2.0 * tau)
        high = n * n / tau
        if math.floor(low) + 1 > math.ceil(high) - 1 or math.ceil(high) - 1 > mcutils.choose2(n):
            raise MCException('No room to oscillate for n=%i, tau=%s' % (n, str(tau)))
        lo_m = int(math.floor(low)) + 1
        hi_m = int(math.ceil(high)) - 1
        target = (lo_m + hi_m) // 2
        while len(pool) < target:
            insert(pool.random_absent(rng))
        for step in range(get('length', 4 * n, int)):
            go_up = (step % 2 == 0)
            if go_up and len(pool) >= hi_m:
                go_up = False
            if not go_up and len(pool) <= lo_m:
                go_up = True
            if go_up:
                insert(pool.random_absent(rng))
            else:
                delete(pool.random_present(rng))
        return events

    p_insert = get('p_insert', 0.6, float)
    for _ in range(get('length', 10 * n, int)):
        if len(pool) == 0 or rng.random() < p_insert:
            e = pool.random_absent(rng)
            if e is None:
                delete(pool.random_present(rng))
            else:
                insert(e)
        else:
            delete(pool.random_present(rng))
    return events


# ........................................................................
#
class CoverAttacker:
    """
    Adaptive adversary for the dense regime. Before each update it inspects
    the engine state and, while it has deletions left, deletes a sampled (F3)
    edge of the current cover, preferring edges of the maintained matching.
    Outside the dense regime, or with nothing to attack, the scripted event
    goes through unchanged.

    Parameters
    -----------
    deletions : int
        Number of adaptive deletions allowed

    seed : int

    """

    def __init__(self, deletions, seed=None):
        self.deletions = int(deletions)
        self.used = 0
        self.rng = mcutils.make_rng(seed)
        self.history = []

    def __call__(self, state, event):
        if self.used >= self.deletions or state['regime'] != 'dense':
            return event
        cover = state.get('cover')
        F = state.get('F')
        if cover is None or F is None:
            return event
        targets = sorted(e for e in cover.F3 if e in F)
        if not targets:
            return event
        matched = [e for e in targets if e in state['matching']]
        pool = matched if matched else targets
        u, v = pool[int(self.rng.integers(len(pool)))]
        self.used += 1
        attack = ScriptEvent('-', u, v)
        self.history.append(attack)
        return attack

    def __repr__(self):
        return "[" + hex(id(self)) + "]: COVER ATTACKER (%i/%i deletions)" % (self.used, self.deletions)
