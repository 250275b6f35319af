import numpy as np
import pytest
import time

from bubblelab.utils import tot_exec_time_str
from bubblelab.utils import chunk
from bubblelab.utils import resolve_n_jobs
from bubblelab.utils import BubbleLabError
from bubblelab.utils import IoError
from bubblelab.utils import NonConvergence


def test_exec_time_str():
    time_start = time.time()
    time.sleep(0.5)
    s = tot_exec_time_str(time_start)
    assert s.startswith('execution time')
    assert float(s.split()[2][:-1]) >= 0.5


def test_chunk():
    x = np.array(range(10))
    chunks = list(chunk(range(len(x)), 3))
    assert len(chunks) == 3
    assert len(chunks[0]) == 4
    assert sum(chunks, []) == list(range(10))


def test_chunk_more_chunks_than_items():
    chunks = list(chunk([1, 2], 5))
    assert chunks == [[1], [2]]


def test_resolve_n_jobs():
    assert resolve_n_jobs(None) == 1
    assert resolve_n_jobs(0) == 1
    assert resolve_n_jobs(3) == 3
    assert resolve_n_jobs(-1) >= 1


def test_error_hierarchy():
    assert issubclass(BubbleLabError, ValueError)
    assert issubclass(IoError, OSError)
    err = NonConvergence('stopped', report={'iterations': 3})
    assert err.report['iterations'] == 3
    with pytest.raises(ValueError):
        raise err
