"""Various helpers not related to the sampling problem itself"""
import logging
import os
import time

import numpy as np

Rng = np.random.Generator

_log = logging.getLogger(__name__)

_THREADS_ENV = 'KRONSAMPLER_THREADS'


# region Multiple utilities


def ensure_parent_dir_exists(file_path):
    """Ensures that the parent directory exists"""
    parent = os.path.dirname(str(file_path))
    if parent:
        os.makedirs(parent, exist_ok=True)


def make_rng(seed=None):
    """
    Returns a `numpy.random.Generator` for the given seed. Generators are
    passed through unchanged so callers can share a stream on purpose.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def trial_seed(base_seed, trial):
    """
    Derives the seed of a single trial. Trials must not depend on the
    order in which workers pick them up, so this is plain arithmetic.
    """
    if base_seed is None:
        return None
    return int(base_seed) + int(trial)


def default_workers():
    """
    Number of benchmark workers, capped by the ``KRONSAMPLER_THREADS``
    environment variable when it is set to a positive integer.
    """
    cpus = os.cpu_count() or 1
    value = os.environ.get(_THREADS_ENV)
    if not value:
        return cpus

    try:
        cap = int(value)
    except ValueError:
        _log.warning('Ignoring non-integer %s=%r', _THREADS_ENV, value)
        return cpus

    if cap < 1:
        _log.warning('Ignoring non-positive %s=%r', _THREADS_ENV, value)
        return cpus

    return min(cap, cpus)


def format_float(value, digits=17):
    """
    Formats a float with the given significant digits. 17 digits are
    enough to round-trip any double, 6 are used for human summaries.
    """
    if value is None:
        return ''
    return '{:.{}g}'.format(float(value), digits)


# endregion

# region Timing


class Stopwatch:
    """
    Measures wall time in nanoseconds around a ``with`` block.

    Only the block is timed, so callers are expected to keep file I/O and
    instance generation outside of it.
    """
    def __init__(self):
        self.start = None
        self.elapsed_ns = None

    def __enter__(self):
        self.start = time.perf_counter_ns()
        return self

    def __exit__(self, *args):
        # A zero reading is possible on coarse clocks, but rows require > 0
        self.elapsed_ns = max(time.perf_counter_ns() - self.start, 1)

    @property
    def elapsed_seconds(self):
        return self.elapsed_ns / 1e9


# endregion
