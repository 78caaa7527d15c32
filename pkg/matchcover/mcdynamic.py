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
mcdynamic maintains an approximate maximum matching of a fully dynamic graph.

Two regimes with hysteresis. The graph is dense once it has at least
n^2 / tau edges, and sparse again once it drops below n^2 / (2 tau).

    sparse  a lazy (1 - eps)-approximate matcher runs on the whole graph
    dense   every T updates (and on entering the regime) a matching cover F
            is rebuilt with build_cover and the lazy matcher restarted on F;
            between rebuilds inserted edges join F, deleted edges leave F,
            and deletions of edges outside F are ignored

DynamicEngine performs the heavy work (cover rebuilds and matcher restarts)
inside the update that triggers it. DeamortizedEngine spreads the same work
over later updates under a fixed per-update allowance: wherever DynamicEngine
would rebuild, it starts a shadow structure that copies the graph and builds
its cover, initializes its matcher, then catches up on the updates it missed
at three replayed updates per update, each phase within T updates. The
engine answers from the newest up-to-date structure and drops them all when
the graph turns sparse again.

Work is measured in units (one adjacency query or one edge move), as
announced by the task generators (see mcutils.run_task). Both engines report
an update's work in two parts: ``last_lazy_units`` for the maintenance of the
structures that answer queries, ``last_units`` for the rest.

"""

import math
from collections import OrderedDict

from .mcexceptions import MCException, PhaseBudgetException
from .mcgraph import Graph, normalize_edge
from .mcmatching import Matching, max_matching_general_task
from .mccover import CoverParams, build_cover_task
from . import mcio
from . import mcutils
from . import configs


INSERT = '+'
DELETE = '-'

_OPS = {'+': INSERT, 'insert': INSERT, '-': DELETE, 'delete': DELETE}


def _op_code(op):
    if op not in _OPS:
        raise MCException('Update operation must be one of %s, got %s' % (str(sorted(_OPS)), str(op)))
    return _OPS[op]


# ........................................................................
#
class DynamicConfig:
    """
    Parameters of the dynamic engines.

    Parameters
    -----------
    tau : float
        Threshold divisor: dense_on = n^2 / tau, dense_off = n^2 / (2 tau)

    epsilon : float
        Slack of the lazy matcher, in (0, 1)

    period : int
        Updates between cover rebuilds. Default is
        ceil(n^1.4 * (ln n)^2), computed by period_for.

    cover_params : CoverParams
        Parameters of the cover rebuilds; workers is forced to 1

    step_budget : int
        Per-update allowance of the deamortized engine

    seed : int

    """

    def __init__(self, tau=None, epsilon=None, period=None, cover_params=None, step_budget=None, seed=None):
        self.tau = configs.DEFAULT_TAU if tau is None else float(tau)
        self.epsilon = configs.DEFAULT_EPSILON if epsilon is None else float(epsilon)
        self.period = None if period is None else int(period)
        self.seed = seed
        if cover_params is None:
            cover_params = CoverParams(overflow='stop', workers=1, seed=seed)
        self.cover_params = cover_params.replace(workers=1)
        self.step_budget = None if step_budget is None else int(step_budget)

        if self.tau <= 0:
            raise MCException('tau must be positive, got %s' % (str(self.tau)))
        mcutils.validate_fraction(self.epsilon, 'epsilon', upper_open=True)
        if self.period is not None and self.period < 1:
            raise MCException('period must be at least 1, got %i' % (self.period))
        if self.step_budget is not None and self.step_budget < configs.MIN_STEP_BUDGET:
            raise MCException('step_budget must be at least %i, got %i' % (configs.MIN_STEP_BUDGET, self.step_budget))

    def period_for(self, n):
        if self.period is not None:
            return self.period
        if n < 2:
            return 1
        return max(1, int(math.ceil(n ** configs.PERIOD_EXPONENT * math.log(n) ** 2)))

    def dense_on(self, n):
        return n * n / self.tau

    def dense_off(self, n):
        return n * n / (2.0 * self.tau)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: DYNAMIC CONFIG (tau=%.2f, eps=%.3f, period=%s, budget=%s)" % (self.tau, self.epsilon, str(self.period), str(self.step_budget))


## ------------------------------------------------------------------------
## lazy matcher

def path_limit(epsilon):
    """
    Alternating-tree depth that makes a recomputed matching (1 - eps/2)-
    approximate: no augmenting path of length <= 2d - 1 means size >= d/(d+1).

    """
    return max(1, int(math.ceil(2.0 / epsilon)) - 1)


class LazyMatcher:
    """
    Lazily recomputed (1 - eps)-approximate matching of a host edge set.

    After a recomputation of size s the matcher tolerates
    floor(eps * s / 4) stale updates before it recomputes with a
    depth-bounded blossom search warm started from the current matching.
    Each update moves the maximum matching size by at most one, so the output
    stays within (1 - eps) of the host's maximum matching at all times.

    While nothing is stale, deleting a matched edge or inserting an edge with
    a free endpoint is repaired on the spot instead: a new augmenting path
    must then end at a vertex the deletion freed or at the free endpoint, and
    one augmentation restores the maximum size, so searching from those
    vertices alone is as good as a full recomputation. An insertion between
    two matched vertices counts as stale.

    """

    def __init__(self, n, epsilon, edges=(), recompute=True):
        mcutils.validate_fraction(epsilon, 'epsilon', upper_open=True)
        self.epsilon = float(epsilon)
        self.host = Graph(n)
        for (u, v) in edges:
            self.host.insert_edge(u, v)
        self.matching = Matching()
        self.stale = 0
        self.budget = 0
        self.recomputes = 0
        self.repairs = 0
        self.units = 0
        self.last_units = 0
        self.max_depth = path_limit(self.epsilon)
        if recompute:
            self.recompute()

    # ........................................................................
    #
    def recompute_task(self):
        matching = yield from max_matching_general_task(self.host, initial=self.matching, max_depth=self.max_depth)
        self.matching = matching
        self.stale = 0
        self.budget = int(math.floor(configs.LAZY_STALE_FRACTION * self.epsilon * len(matching)))
        self.recomputes += 1
        return matching

    def repair_task(self, roots):
        matching = yield from max_matching_general_task(self.host, initial=self.matching, max_depth=self.max_depth, roots=roots)
        self.matching = matching
        self.repairs += 1
        return matching

    def recompute(self):
        _, units = mcutils.run_task(self.recompute_task())
        self.units += units
        return units

    # ........................................................................
    #
    def update_task(self, op, u, v):
        """
        Task form of one update: one unit for the edge move, then the repair or
        recomputation it triggers. Returns whether the host changed.

        """
        code = _op_code(op)
        u, v = normalize_edge(u, v)
        if ((u, v) in self.host) == (code == INSERT):
            return False
        yield 1

        roots = ()
        if code == INSERT:
            self.host.insert_edge(u, v)
            free = [w for w in (u, v) if not self.matching.is_matched(w)]
            if len(free) == 2:
                self.matching.add(u, v)
            elif free:
                roots = free
            else:
                self.stale += 1
        else:
            self.host.delete_edge(u, v)
            if self.matching.remove(u, v):
                roots = (u, v)

        if roots and self.stale > 0:
            # a stale matching gives no guarantee that only the roots can improve it
            self.stale += 1
            roots = ()
        if self.stale > self.budget:
            yield from self.recompute_task()
        elif roots:
            yield from self.repair_task(roots)
        return True

    def apply(self, op, u, v):
        """
        Applies (op, u, v) to the host; returns the work units spent, 0 when
        the update changes nothing.

        """
        _, units = mcutils.run_task(self.update_task(op, u, v))
        self.units += units
        self.last_units = units
        return units

    def insert(self, u, v):
        return self.apply(INSERT, u, v)

    def delete(self, u, v):
        return self.apply(DELETE, u, v)

    @property
    def size(self):
        return len(self.matching)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: LAZY MATCHER (host m=%i, |M|=%i, stale=%i/%i)" % (self.host.m, len(self.matching), self.stale, self.budget)


def lazy_maintain(l, update=None):
    """
    Applies one (op, u, v) update to a LazyMatcher (None just queries) and
    returns its matching.

    """
    if update is not None:
        op, u, v = update
        l.apply(op, u, v)
    return l.matching


def lazy_init_task(n, epsilon, edges):
    """
    Task that builds a LazyMatcher edge by edge (one unit per edge) and then
    runs its first recomputation.

    """
    lazy = LazyMatcher(n, epsilon, recompute=False)
    for (u, v) in edges:
        yield 1
        lazy.host.insert_edge(u, v)
    yield from lazy.recompute_task()
    return lazy


## ------------------------------------------------------------------------
## cover rebuilds

def _cover_task(g, params, verbose=False):
    """
    build_cover when the graph is large enough, otherwise every edge.

    """
    if g.n < params.min_vertices():
        yield max(1, g.m)
        return None, set(g.edges())
    report = yield from build_cover_task(g, params, verbose=verbose)
    return report, set(report.F)


def _rebuild_params(config, count):
    seed = None if config.seed is None else [int(config.seed), count]
    return config.cover_params.replace(seed=seed)


def snapshot_task(g, log):
    """
    Copy of ``g`` as it was when the task was created, taken one row per chunk
    while updates keep arriving.

    Every update applied to ``g`` after the creation must be appended to
    ``log`` as (op, u, v). Rows copied late may already show some of them, so
    once all rows are copied each edge the log touches is reset to its state
    before its first logged update (absent if that was an insertion, present
    if it was a deletion). Edges first touched after that point were copied
    untouched.

    Announced work: one unit per copied edge (at least one per row) and one per
    reset edge.

    """
    snapshot = Graph(g.n)
    for u in range(g.n):
        row = [w for w in g.neighbors(u) if w > u]
        yield max(1, len(row))
        for w in row:
            snapshot.insert_edge(u, w)

    touched = set()
    for (code, u, v) in list(log):
        if (u, v) in touched:
            continue
        touched.add((u, v))
        yield 1
        if code == INSERT:
            snapshot.delete_edge(u, v)
        else:
            snapshot.insert_edge(u, v)
    return snapshot


def _snapshot_cover_task(g, log, params, verbose=False):
    snapshot = yield from snapshot_task(g, log)
    result = yield from _cover_task(snapshot, params, verbose)
    return result


## ------------------------------------------------------------------------
## amortized engine

class DynamicEngine:
    """
    Amortized two-regime engine. Heavy work happens inside the update that
    triggers it; ``last_units`` reports it.

    Parameters
    -----------
    n : int
        Number of vertices, at least 1

    config : DynamicConfig

    verbose : bool

    """

    def __init__(self, n, config=None, verbose=False):
        if n < 1:
            raise MCException('Dynamic engine needs n >= 1, got %s' % (str(n)))
        if config is None:
            config = DynamicConfig()
        self.n = int(n)
        self.config = config
        self.verbose = verbose
        self.g = Graph(self.n)
        self.regime = 'sparse'
        self.period = config.period_for(self.n)
        self.dense_on = config.dense_on(self.n)
        self.dense_off = config.dense_off(self.n)

        self.lazy = LazyMatcher(self.n, config.epsilon)
        self.F = set()
        self.cover = None
        self.f_at_recompute = 0
        self.since_recompute = 0
        self.rebuilds = 0
        self.regime_switches = 0

        self.update_count = 0
        self.work_units = 0
        self.last_units = 0
        self.lazy_units = 0
        self.last_lazy_units = 0
        self.last_status = 'init'

    # ........................................................................
    #
    @property
    def matching(self):
        return self.lazy.matching

    def __rebuild(self):
        (report, F), cover_units = mcutils.run_task(_cover_task(self.g, _rebuild_params(self.config, self.rebuilds), self.verbose))
        lazy, init_units = mcutils.run_task(lazy_init_task(self.n, self.config.epsilon, sorted(F)))
        self.cover = report
        self.F = F
        self.lazy = lazy
        self.f_at_recompute = len(F)
        self.since_recompute = 0
        self.rebuilds += 1
        mcio.status_message('update %i: rebuilt cover with %i of %i edges' % (self.update_count, len(F), self.g.m), self.verbose)
        return cover_units + init_units

    def __restart_sparse(self):
        lazy, units = mcutils.run_task(lazy_init_task(self.n, self.config.epsilon, self.g.edges()))
        self.lazy = lazy
        self.F = set()
        self.cover = None
        mcio.status_message('update %i: back to the sparse regime (m=%i)' % (self.update_count, self.g.m), self.verbose)
        return units

    # ........................................................................
    #
    def update(self, op, u, v):
        """
        Applies one update and returns the maintained matching.

        Inserting a present edge or deleting an absent one changes nothing and
        sets ``last_status`` to 'noop'.

        """
        code = _op_code(op)
        u, v = normalize_edge(u, v)
        changed = self.g.insert_edge(u, v) if code == INSERT else self.g.delete_edge(u, v)
        if not changed:
            self.last_status = 'noop'
            self.last_units = 0
            self.last_lazy_units = 0
            return self.matching

        self.update_count += 1
        heavy = 0
        lazy_units = 0
        if self.regime == 'sparse':
            lazy_units += self.lazy.apply(code, u, v)
            if self.g.m >= self.dense_on:
                self.regime = 'dense'
                self.regime_switches += 1
                heavy += self.__rebuild()
        else:
            if code == INSERT:
                self.F.add((u, v))
                lazy_units += self.lazy.insert(u, v)
            elif (u, v) in self.F:
                self.F.discard((u, v))
                lazy_units += self.lazy.delete(u, v)
            self.since_recompute += 1

            if self.g.m < self.dense_off:
                self.regime = 'sparse'
                self.regime_switches += 1
                heavy += self.__restart_sparse()
            elif self.since_recompute >= self.period:
                heavy += self.__rebuild()

        self.last_status = 'applied'
        self.last_units = heavy
        self.last_lazy_units = lazy_units
        self.work_units += heavy
        self.lazy_units += lazy_units
        return self.matching

    # ........................................................................
    #
    def check_invariants(self):
        """
        Raises MCException unless the matching is valid in the current graph
        and the regime structure is consistent.

        """
        self.matching.validate(self.g)
        if self.regime == 'dense':
            for e in self.F:
                if e not in self.g:
                    raise MCException('Cover edge %s is not in the graph' % (str(e)))
            if len(self.F) > self.f_at_recompute + self.since_recompute:
                raise MCException('Cover grew to %i edges, more than %i + %i' % (len(self.F), self.f_at_recompute, self.since_recompute))
            if self.lazy.host.edge_set() != frozenset(self.F):
                raise MCException('Lazy matcher host differs from the cover')
        elif self.lazy.host.edge_set() != self.g.edge_set():
            raise MCException('Lazy matcher host differs from the graph in the sparse regime')
        return True

    def state(self):
        """
        Full engine state, for adaptive adversaries.

        """
        return {'g': self.g,
                'regime': self.regime,
                'F': frozenset(self.F) if self.regime == 'dense' else None,
                'cover': self.cover if self.regime == 'dense' else None,
                'matching': self.matching,
                'update_count': self.update_count,
                'since_recompute': self.since_recompute,
                'period': self.period}

    def __repr__(self):
        return "[" + hex(id(self)) + "]: DYNAMIC ENGINE (n=%i, m=%i, %s, |M|=%i)" % (self.n, self.g.m, self.regime, len(self.matching))


def dyn_init(n, config=None, verbose=False):
    return DynamicEngine(n, config=config, verbose=verbose)


def dyn_update(e, op, u, v):
    return e.update(op, u, v)


## ------------------------------------------------------------------------
## deamortized engine

class SparseTracker:
    """
    Lazy matcher over at most ``capacity`` edges of the graph; further edges
    wait in the overflow list L. A deletion that brings the structure below
    capacity immediately moves the oldest edge of L into it, so whenever the
    graph has fewer than ``capacity`` edges all of them are in the structure.

    """

    def __init__(self, n, epsilon, capacity):
        self.capacity = max(1, int(math.ceil(capacity)))
        self.lazy = LazyMatcher(n, epsilon)
        self.overflow = OrderedDict()

    @property
    def matching(self):
        return self.lazy.matching

    def insert(self, u, v):
        if self.lazy.host.m < self.capacity:
            return self.lazy.insert(u, v)
        self.overflow[(u, v)] = None
        return 1

    def delete(self, u, v):
        if (u, v) in self.lazy.host:
            units = self.lazy.delete(u, v)
            if self.lazy.host.m < self.capacity and self.overflow:
                (a, b), _ = self.overflow.popitem(last=False)
                units += self.lazy.insert(a, b)
            return units
        self.overflow.pop((u, v), None)
        return 1

    def holds_everything(self):
        return not self.overflow

    def edge_set(self):
        return self.lazy.host.edge_set() | frozenset(self.overflow)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: SPARSE TRACKER (%i held, %i waiting)" % (self.lazy.host.m, len(self.overflow))


class ShadowStructure:
    """
    One background dense-regime structure, started from the graph as it is
    right after update ``started_at``. Phases run in order

        build    snapshot of the graph, then its cover (BudgetedTask)
        init     lazy matcher over the cover (BudgetedTask)
        catchup  replays the logged updates, starting at most three per
                 update; each replay is a BudgetedTask of its own
        live     up to date; receives updates directly

    Each of the first three phases must finish within ``period`` updates.

    """

    def __init__(self, index, g, config, started_at, verbose=False):
        self.index = index
        self.started_at = started_at
        self.config = config
        self.n = g.n
        self.phase = 'build'
        self.phase_updates = 0
        self.log = []
        self.log_head = 0
        self.F = None
        self.f_at_build = 0
        self.cover = None
        self.lazy = None
        self.replay = None
        self.replayed = 0
        self.task = mcutils.BudgetedTask(_snapshot_cover_task(g, self.log, _rebuild_params(config, index), verbose), name='build-%i' % (index))

    # ........................................................................
    #
    @property
    def pending(self):
        return len(self.log) - self.log_head

    def record(self, code, u, v):
        self.log.append((code, u, v))

    def replay_task(self, code, u, v):
        """
        One update carried into F and the lazy matcher: a unit for reading it,
        then the matcher's own work. Deletions outside F stop after the read.

        """
        yield 1
        if code == INSERT:
            self.F.add((u, v))
        elif (u, v) in self.F:
            self.F.discard((u, v))
        else:
            return
        yield from self.lazy.update_task(code, u, v)

    def apply(self, code, u, v):
        _, units = mcutils.run_task(self.replay_task(code, u, v))
        return units

    # ........................................................................
    #
    def __catch_up(self, allowance):
        used = 0
        started = 0
        while True:
            if self.replay is None:
                if not self.pending:
                    self.phase = 'live'
                    self.log = []
                    self.log_head = 0
                    break
                if started >= configs.REPLAYS_PER_UPDATE:
                    break
                code, u, v = self.log[self.log_head]
                self.log_head += 1
                self.replay = mcutils.BudgetedTask(self.replay_task(code, u, v), name='replay-%i' % (self.index))
                started += 1
            used += self.replay.advance(allowance - used)
            if not self.replay.done:
                break
            self.replay = None
            self.replayed += 1
        return used

    def advance(self, allowance):
        """
        Spends at most ``allowance`` units; returns the units spent.

        """
        used = 0
        while self.phase in ('build', 'init'):
            used += self.task.advance(allowance - used)
            if not self.task.done:
                return used
            if self.phase == 'build':
                self.cover, self.F = self.task.result
                self.f_at_build = len(self.F)
                self.task = mcutils.BudgetedTask(lazy_init_task(self.n, self.config.epsilon, sorted(self.F)), name='init-%i' % (self.index))
                self.phase = 'init'
            else:
                self.lazy = self.task.result
                self.task = None
                self.phase = 'catchup'
            self.phase_updates = 0

        if self.phase == 'catchup':
            used += self.__catch_up(allowance - used)
        return used

    def tick(self, phase_before, period):
        if self.phase == 'live':
            return
        if self.phase != phase_before:
            return
        self.phase_updates += 1
        if self.phase_updates >= period:
            raise PhaseBudgetException('shadow %i did not finish its %s phase within %i updates' % (self.index, self.phase, period), phase=self.phase)

    def __repr__(self):
        return "[" + hex(id(self)) + "]: SHADOW %i (%s, %i pending)" % (self.index, self.phase, self.pending)


class DeamortizedEngine:
    """
    Worst-case engine: the work of an update never exceeds the step budget
    unless its foreground maintenance alone does. See the module docstring
    for the schedule.

    Parameters
    -----------
    n : int

    config : DynamicConfig

    step_budget : int
        Units of work per update. Default is config.step_budget.

    """

    def __init__(self, n, config=None, step_budget=None, verbose=False):
        if n < 1:
            raise MCException('Dynamic engine needs n >= 1, got %s' % (str(n)))
        if config is None:
            config = DynamicConfig()
        if step_budget is None:
            step_budget = config.step_budget
        if step_budget is None:
            raise MCException('DeamortizedEngine needs a step budget')
        self.n = int(n)
        self.config = config
        self.verbose = verbose
        self.step_budget = self.__check_budget(step_budget)
        self.last_budget = self.step_budget

        self.g = Graph(self.n)
        self.regime = 'sparse'
        self.period = config.period_for(self.n)
        self.dense_on = config.dense_on(self.n)
        self.dense_off = config.dense_off(self.n)

        self.tracker = SparseTracker(self.n, config.epsilon, self.dense_on)
        self.shadows = []
        self.live = None
        self.started = 0
        self.last_start = 0
        self.retired = 0

        self.update_count = 0
        self.work_units = 0
        self.last_units = 0
        self.max_units = 0
        self.lazy_units = 0
        self.last_lazy_units = 0
        self.regime_switches = 0
        self.last_status = 'init'

    @staticmethod
    def __check_budget(step_budget):
        step_budget = int(step_budget)
        if step_budget < configs.MIN_STEP_BUDGET:
            raise MCException('step_budget must be at least %i, got %i' % (configs.MIN_STEP_BUDGET, step_budget))
        return step_budget

    # ........................................................................
    #
    @property
    def answering(self):
        """
        'live' when the dense-regime answer comes from an up-to-date shadow,
        'tracker' otherwise.

        """
        if self.regime == 'dense' and self.live is not None:
            return 'live'
        return 'tracker'

    @property
    def matching(self):
        if self.answering == 'live':
            return self.live.lazy.matching
        return self.tracker.matching

    def __start_shadow(self):
        self.shadows.append(ShadowStructure(self.started, self.g, self.config, self.update_count, self.verbose))
        self.started += 1
        self.last_start = self.update_count

    def __drop_shadows(self):
        self.retired += len(self.shadows) + (0 if self.live is None else 1)
        self.shadows = []
        self.live = None
        mcio.status_message('update %i: back to the sparse regime (m=%i), shadows dropped' % (self.update_count, self.g.m), self.verbose)

    # ........................................................................
    #
    def step(self, op, u, v, step_budget=None):
        """
        Applies one update and returns the maintained matching.

        Foreground maintenance (the sparse tracker and the live structure) is
        charged first; the shadows share what is left of ``step_budget``.
        ``last_lazy_units`` reports the former and ``last_units`` the latter.

        Raises
        --------
        PhaseBudgetException
            If a shadow misses the deadline of its current phase

        """
        budget = self.step_budget if step_budget is None else self.__check_budget(step_budget)
        code = _op_code(op)
        u, v = normalize_edge(u, v)
        changed = self.g.insert_edge(u, v) if code == INSERT else self.g.delete_edge(u, v)
        if not changed:
            self.last_status = 'noop'
            self.last_units = 0
            self.last_lazy_units = 0
            return self.matching
        self.update_count += 1
        self.last_budget = budget

        lazy_units = self.tracker.insert(u, v) if code == INSERT else self.tracker.delete(u, v)
        if self.live is not None:
            lazy_units += self.live.apply(code, u, v)
        for shadow in self.shadows:
            shadow.record(code, u, v)

        # shadows start where DynamicEngine would rebuild
        if self.regime == 'sparse' and self.g.m >= self.dense_on:
            self.regime = 'dense'
            self.regime_switches += 1
            self.__start_shadow()
        elif self.regime == 'dense' and self.g.m < self.dense_off:
            self.regime = 'sparse'
            self.regime_switches += 1
            self.__drop_shadows()
        elif self.regime == 'dense' and self.update_count - self.last_start >= self.period:
            self.__start_shadow()

        allowance = max(0, budget - lazy_units)
        remaining = allowance
        for shadow in list(self.shadows):
            before = shadow.phase
            remaining -= shadow.advance(remaining)
            shadow.tick(before, self.period)

        newly_live = [s for s in self.shadows if s.phase == 'live']
        if newly_live:
            # newest wins; older up-to-date structures are dropped
            newest = max(newly_live, key=lambda s: s.index)
            self.retired += len(newly_live) - 1 + (0 if self.live is None else 1)
            self.live = newest
            self.shadows = [s for s in self.shadows if s.phase != 'live']
            mcio.status_message('update %i: shadow %i is up to date (|F|=%i)' % (self.update_count, newest.index, len(newest.F)), self.verbose)

        spent = allowance - remaining
        self.last_status = 'applied'
        self.last_units = spent
        self.max_units = max(self.max_units, spent + lazy_units)
        self.work_units += spent
        self.last_lazy_units = lazy_units
        self.lazy_units += lazy_units
        return self.matching

    def update(self, op, u, v):
        return self.step(op, u, v)

    # ........................................................................
    #
    def check_invariants(self):
        self.matching.validate(self.g)
        if self.tracker.edge_set() != self.g.edge_set():
            raise MCException('Sparse tracker and overflow list do not hold the graph')
        if self.regime == 'sparse' and not self.tracker.holds_everything():
            raise MCException('Sparse regime with edges waiting in the overflow list')
        if self.regime == 'sparse' and (self.shadows or self.live is not None):
            raise MCException('Sparse regime with dense-regime structures still running')
        if self.live is not None:
            for e in self.live.F:
                if e not in self.g:
                    raise MCException('Live cover edge %s is not in the graph' % (str(e)))
        if self.last_units > max(0, self.last_budget - self.last_lazy_units):
            raise MCException('Background work %i exceeded what the step budget %i left after %i foreground units' % (self.last_units, self.last_budget, self.last_lazy_units))
        return True

    def state(self):
        live = self.answering == 'live'
        return {'g': self.g,
                'regime': self.regime,
                'F': frozenset(self.live.F) if live else None,
                'cover': self.live.cover if live else None,
                'matching': self.matching,
                'update_count': self.update_count,
                'since_recompute': (self.update_count - self.live.started_at if live else 0),
                'period': self.period,
                'shadows': [(s.index, s.phase) for s in self.shadows]}

    def __repr__(self):
        return "[" + hex(id(self)) + "]: DEAMORTIZED ENGINE (n=%i, m=%i, %s, answering from %s)" % (self.n, self.g.m, self.regime, self.answering)


def deamortized_step(e, op, u, v, step_budget=None):
    return e.step(op, u, v, step_budget=step_budget)
