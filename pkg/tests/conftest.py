import os

# numba falls back to the GNU OpenMP threading layer when TBB is too old; OpenMP aborts
# any process forked after it started, which deadlocks the multiprocessing.Pool tests.
# The workqueue layer is fork-safe and computes the same results.
os.environ.setdefault('NUMBA_THREADING_LAYER', 'workqueue')
