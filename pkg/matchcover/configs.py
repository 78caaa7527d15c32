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
configs contain all global configuration.

Algorithm defaults live here so that every module (and the command line) pulls
the same numbers. Per-call overrides go through ``CoverParams`` and
``DynamicConfig``.

"""

import multiprocessing as mp
import os
import platform
import tempfile


MAXCORES = mp.cpu_count()
DEBUGGING = False


# See: https://stackoverflow.com/questions/847850/cross-platform-way-of-getting-temp-directory-in-python
TMP_DIR = tempfile.gettempdir()
if platform.system().lower() == 'darwin':
    TMP_DIR = '/tmp'


def _threads_from_environment(name='MATCHCOVER_THREADS'):
    raw = os.environ.get(name, '1')
    try:
        value = int(raw)
    except ValueError:
        value = 1
    return max(1, min(value, MAXCORES))


# caps BLAS threads (via threadpoolctl) and the regularity pair-check pool
THREADS = _threads_from_environment()

# version of the JSON / CSV record layout written by the command line
SCHEMA_VERSION = 1

# numerical slack used whenever floats are compared against thresholds
FLOAT_TOL = 1e-9


## ------------------------------------------------------------------------
## regularity partition
DEFAULT_T = 4
DEFAULT_GAMMA = 0.2
DEFAULT_MAX_ROUNDS = 20
EXACT_CLASS_LIMIT = 16


## ------------------------------------------------------------------------
## matching cover construction (good pairs need density >= 8*gamma, sampling
## probability is min(1, 10/ln n))
GOOD_DENSITY_FACTOR = 8.0
SAMPLE_NUMERATOR = 10.0

CONSOLIDATE_RETRIES = 64
VERIFY_SAMPLES = 1000

EXHAUSTIVE_HITTING_LIMIT = 14
EXHAUSTIVE_COVER_LIMIT = 12
BRUTE_FORCE_EDGE_LIMIT = 20
HALL_CROSS_CHECK_LIMIT = 12
EXHAUSTIVE_MATCHING_LIMIT = 20


## ------------------------------------------------------------------------
## streaming
MC_CALIBRATION_SLACK = 1.5
CASCADE_SPACE_FACTOR = 4.0
NAIVE_BITS_PER_EDGE = 64


## ------------------------------------------------------------------------
## dynamic engine
DEFAULT_TAU = 4.0
DEFAULT_EPSILON = 0.1
PERIOD_EXPONENT = 1.4
REPLAYS_PER_UPDATE = 3

# smallest per-update allowance of the deamortized engine: the catch-up
# replays plus one unit of background work
MIN_STEP_BUDGET = REPLAYS_PER_UPDATE + 1

# the lazy matcher tolerates LAZY_STALE_FRACTION * epsilon * |M| updates
# between recomputations
LAZY_STALE_FRACTION = 0.25
