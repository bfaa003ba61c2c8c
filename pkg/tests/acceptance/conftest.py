import numpy as np

from kronsampler import helpers


def min_time_ns(fn, repeats):
    """Smallest wall time of ``repeats`` calls, which filters scheduler noise."""
    best = None
    for _ in range(repeats):
        with helpers.Stopwatch() as watch:
            fn()
        best = watch.elapsed_ns if best is None else min(best, watch.elapsed_ns)
    return best


def relative_error(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return np.linalg.norm(a - b) / np.linalg.norm(b)
