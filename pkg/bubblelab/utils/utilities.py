import time


def tot_exec_time_str(time_start):
    """ execution time
        This function gives out the formatted time string.
    """
    time_end = time.time()
    exec_time = time_end-time_start
    tmp_str = "execution time: %0.2fs (%dh %dm %0.2fs)" %(exec_time, exec_time/3600, (exec_time%3600)/60,(exec_time%3600)%60)
    return tmp_str


def chunk(xs, n):
    """
    split a sequence into n contiguous chunks of (almost) equal size, keeping the order.

    Parameters
    ----------
    xs: sequence
        the elements to split, e.g. row indices of a table

    n: int
        the number of chunks (e.g. the number of worker processes)

    Returns
    -------
    generator
        lists of consecutive elements; concatenating them restores xs

    Examples
    --------
    >>> list(chunk(range(5), 2))
    [[0, 1, 2], [3, 4]]
    """
    ys = list(xs)
    n = max(1, min(int(n), len(ys))) if len(ys) > 0 else 1
    size, extra = divmod(len(ys), n)
    start = 0
    for c in range(n):
        stop = start + size + (1 if c < extra else 0)
        yield ys[start:stop]
        start = stop


def resolve_n_jobs(n_jobs):
    """
    translate the n_jobs convention (-1 means all cores) to a positive number of processes
    """
    from multiprocessing import cpu_count
    if n_jobs is None or n_jobs == 0:
        return 1
    if n_jobs < 0:
        return max(1, cpu_count() + 1 + n_jobs)
    return int(n_jobs)
