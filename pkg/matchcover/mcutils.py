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
mcutils contains small helpers shared by every module: keyword validation, seeded
random generators, BLAS thread capping and the driver for work-announcing tasks.

"""

import contextlib
import math

import numpy as np
from threadpoolctl import threadpool_info, threadpool_limits

from .mcexceptions import MCException
from . import configs


def validate_keyword_option(keyword, allowed_vals, keyword_name, error_message=None):
    """
    Raises MCException unless ``keyword`` is one of ``allowed_vals``. Used for
    every string-valued option (orders, modes, overflow policies, cover kinds).

    Parameters
    -----------
    keyword : str
        Value that was passed

    allowed_vals : list of str
        Accepted values

    keyword_name : str
        Name of the option, as it appears in the calling signature

    error_message : str
        Replaces the generated message. Must be a string; anything else is a
        programming error and raises RuntimeError.

    Returns
    --------
    None

    """
    if keyword in allowed_vals:
        return

    if error_message is None:
        raise MCException('%s=%r is not valid, expected one of: %s' % (keyword_name, keyword, ', '.join(allowed_vals)))

    if not isinstance(error_message, str):
        raise RuntimeError('error_message must be a str, got %s' % (type(error_message).__name__))
    raise MCException(error_message)


def validate_fraction(value, name, lower_open=True, upper_open=False):
    """
    Checks that ``value`` lies in (0,1] (default) and raises MCException otherwise.

    """
    if value is None or isinstance(value, bool):
        raise MCException('%s must be a number, got %s' % (name, str(value)))
    low_ok = value > 0 if lower_open else value >= 0
    high_ok = value < 1 if upper_open else value <= 1
    if not (low_ok and high_ok):
        raise MCException('%s must lie in %s0, 1%s, got %s' % (name,
                                                               '(' if lower_open else '[',
                                                               ')' if upper_open else ']',
                                                               str(value)))


## ------------------------------------------------------------------------
## randomness
##
## Every randomized routine takes a seed (or a Generator) and goes through
## make_rng, so fixing the seed fixes the output.

def make_rng(seed=None):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_seeds(seed, count):
    """
    Derives ``count`` independent integer seeds from one parent seed.

    Parameters
    -----------
    seed : int or None
        Parent seed

    count : int
        Number of child seeds

    Returns
    --------
    list of int

    """
    sequence = np.random.SeedSequence(seed)
    return [int(child.generate_state(1)[0]) for child in sequence.spawn(count)]


def ceil_log2(value):
    if value <= 1:
        return 0
    return int(math.ceil(math.log2(value)))


def choose2(n):
    return n * (n - 1) // 2


## ------------------------------------------------------------------------
## threads

def blas_thread_info():
    """
    Returns (library, num_threads) pairs for every BLAS pool threadpoolctl sees.

    """
    return [(pool.get('internal_api', 'unknown'), pool.get('num_threads', 0)) for pool in threadpool_info()]


@contextlib.contextmanager
def limited_threads(num_threads=None):
    """
    Context manager that caps BLAS threads for the duration of the block.

    """
    if num_threads is None:
        num_threads = configs.THREADS
    with threadpool_limits(limits=int(num_threads)):
        yield


## ------------------------------------------------------------------------
## tasks
##
## Long-running routines are written as generators that yield the number of
## work units of the chunk they are ABOUT to perform and perform it when they
## are resumed. The final answer comes back through StopIteration.value. This
## lets the deamortized engine stop a task before it overspends, and lets
## everyone else run the same code to completion with run_task.

def run_task(task):
    """
    Drives a task to completion.

    Parameters
    -----------
    task : generator
        A generator following the announce-then-perform protocol

    Returns
    --------
    tuple
        (result, units) where units is the sum of every announced cost

    """
    units = 0
    try:
        cost = next(task)
        while True:
            units += cost
            cost = task.send(None)
    except StopIteration as stop:
        return stop.value, units


class BudgetedTask:
    """
    Wraps a task so it can be advanced under an explicit work allowance.

    A chunk is only started if its announced cost fits in what is left of the
    allowance, so ``spent`` never exceeds the sum of allowances handed out.

    """

    def __init__(self, task, name=None):
        self.__task = task
        self.name = name
        self.spent = 0
        self.done = False
        self.result = None
        self.__next_cost = None
        self.__prime()

    # ........................................................................
    #
    def __prime(self):
        try:
            self.__next_cost = next(self.__task)
        except StopIteration as stop:
            self.done = True
            self.result = stop.value

    # ........................................................................
    #
    @property
    def next_cost(self):
        return None if self.done else self.__next_cost

    # ........................................................................
    #
    def advance(self, allowance):
        """
        Performs chunks while they fit in ``allowance``.

        Parameters
        -----------
        allowance : int
            Units available for this call

        Returns
        --------
        int
            Units actually spent in this call

        """
        used = 0
        while not self.done and used + self.__next_cost <= allowance:
            used += self.__next_cost
            try:
                self.__next_cost = self.__task.send(None)
            except StopIteration as stop:
                self.done = True
                self.result = stop.value
        self.spent += used
        return used

    def __repr__(self):
        return "[" + hex(id(self)) + "]: BUDGETED TASK %s (spent=%i, done=%s)" % (self.name, self.spent, self.done)
