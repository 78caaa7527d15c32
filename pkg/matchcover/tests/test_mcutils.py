"""
Unit and regression test for the mcutils module.
"""
import pytest
import numpy as np
from matchcover import mcutils
from matchcover.mcexceptions import MCException


def test_validate_keyword_option():
    allowed_modes = ['exact', 'sampled']
    for mode in allowed_modes:
        mcutils.validate_keyword_option(mode, allowed_modes, 'mode')
        mcutils.validate_keyword_option(mode, allowed_modes, 'mode', 'Unsupported mode.')

    # mismatched keyword
    with pytest.raises(MCException):
        mcutils.validate_keyword_option('invalid_mode', allowed_modes, 'mode')

    # mismatched keyword with a custom message
    with pytest.raises(MCException):
        mcutils.validate_keyword_option('invalid_mode', allowed_modes, 'mode', 'Unsupported mode.')

    # non-string error message
    with pytest.raises(RuntimeError):
        mcutils.validate_keyword_option('invalid_mode', allowed_modes, 'mode', 123)


def test_validate_fraction():
    mcutils.validate_fraction(0.5, 'x')
    mcutils.validate_fraction(1, 'x')
    mcutils.validate_fraction(0, 'x', lower_open=False)

    for bad in (0, -0.1, 1.5, None, True):
        with pytest.raises(MCException):
            mcutils.validate_fraction(bad, 'x')

    with pytest.raises(MCException):
        mcutils.validate_fraction(1, 'x', upper_open=True)


def test_rng_is_reproducible():
    a = mcutils.make_rng(7).random(5)
    b = mcutils.make_rng(7).random(5)
    assert np.array_equal(a, b)

    rng = np.random.default_rng(1)
    assert mcutils.make_rng(rng) is rng


def test_spawn_seeds():
    seeds = mcutils.spawn_seeds(42, 4)
    assert len(seeds) == 4
    assert len(set(seeds)) == 4
    assert seeds == mcutils.spawn_seeds(42, 4)
    assert seeds != mcutils.spawn_seeds(43, 4)


def test_small_arithmetic():
    assert mcutils.ceil_log2(1) == 0
    assert mcutils.ceil_log2(2) == 1
    assert mcutils.ceil_log2(5) == 3
    assert mcutils.ceil_log2(8) == 3
    assert mcutils.choose2(0) == 0
    assert mcutils.choose2(10) == 45


def _counting_task(chunks):
    total = 0
    for cost in chunks:
        yield cost
        total += cost
    return total


def test_run_task():
    result, units = mcutils.run_task(_counting_task([3, 1, 4]))
    assert result == 8
    assert units == 8

    result, units = mcutils.run_task(_counting_task([]))
    assert result == 0
    assert units == 0


def test_budgeted_task_respects_allowance():
    task = mcutils.BudgetedTask(_counting_task([2, 2, 5, 1]), name='count')
    assert task.next_cost == 2

    # only the first chunk fits
    assert task.advance(3) == 2
    assert not task.done
    assert task.next_cost == 2

    # the 5-unit chunk does not fit in 4 units
    assert task.advance(4) == 2
    assert task.next_cost == 5

    assert task.advance(100) == 6
    assert task.done
    assert task.result == 10
    assert task.spent == 10
    assert task.next_cost is None

    # finished tasks spend nothing
    assert task.advance(10) == 0


def test_budgeted_task_empty():
    task = mcutils.BudgetedTask(_counting_task([]))
    assert task.done
    assert task.result == 0


def test_limited_threads():
    with mcutils.limited_threads(1):
        for (library, threads) in mcutils.blas_thread_info():
            assert threads == 1
    assert isinstance(mcutils.blas_thread_info(), list)
