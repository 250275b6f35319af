from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from bubblelab.utils.exceptions import IoError


RATES_COLUMNS = ['eps', 'deviation', 'hyp_product', 'a_decay_slope']


@dataclass
class Check(object):
    """
    one asserted check

    Parameters
    ----------
    name: str

    measured: float

    relation: str
        '<=', '>=' or 'in'

    tolerance: float or list
        the bound, or [low, high] for 'in'

    passed: bool
    """
    name: str
    measured: float
    relation: str
    tolerance: object
    passed: bool

    def line(self):
        status = 'PASS' if self.passed else 'FAIL'
        return '%s  %s: %.6g %s %s' % (status, self.name, self.measured, self.relation, str(self.tolerance))

    def to_dict(self):
        return {'name': self.name, 'measured': self.measured, 'relation': self.relation,
                'tolerance': self.tolerance, 'passed': self.passed}


def check_le(name, measured, bound):
    measured = float(measured)
    return Check(name, measured, '<=', float(bound), bool(measured <= bound))


def check_ge(name, measured, bound):
    measured = float(measured)
    return Check(name, measured, '>=', float(bound), bool(measured >= bound))


def check_in(name, measured, low, high):
    measured = float(measured)
    return Check(name, measured, 'in', [float(low), float(high)], bool(low <= measured <= high))


@dataclass
class Report(object):
    """
    the outcome of one experiment run

    Parameters
    ----------
    experiment: str

    version: str

    config: dict
        the merged configuration, every tolerance used included

    config_hash: str

    results: dict
        scalars and fits

    checks: list of Check

    curves: dict
        name -> RadialField, written as <name>.csv

    rates: list of dict or None
        rows of rates.csv

    timings: dict
        wall-clock seconds per stage, written to timings.json
    """
    experiment: str
    version: str
    config: dict
    config_hash: str
    results: dict = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    curves: Dict[str, object] = field(default_factory=dict)
    rates: Optional[list] = None
    timings: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failed_checks(self):
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self):
        """ the content of report.json; timings and curves are written to their own files """
        return {'experiment': self.experiment,
                'version': self.version,
                'config': self.config,
                'config_hash': self.config_hash,
                'results': self.results,
                'checks': [c.to_dict() for c in self.checks],
                'passed': self.passed,
                'curves': sorted(self.curves),
                'rates_rows': None if self.rates is None else len(self.rates)}


def jsonable(obj):
    """ numpy scalars and arrays to python, non-finite floats to strings """
    if isinstance(obj, dict):
        return dict((str(k), jsonable(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if math.isfinite(x):
            return x
        return 'nan' if math.isnan(x) else ('inf' if x > 0 else '-inf')
    if obj is None or isinstance(obj, str):
        return obj
    if hasattr(obj, 'to_dict'):
        return jsonable(obj.to_dict())
    return str(obj)


def _write_json(path, data):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(jsonable(data), f, sort_keys=True, indent=2, ensure_ascii=False)
        f.write('\n')


def emit(report, output_dir):
    """
    write the report files

    Parameters
    ----------
    report: Report

    output_dir: str
        created when missing

    Returns
    -------
    list of str
        the written paths: report.json, timings.json, <curve>.csv and rates.csv

    Raises
    ------
    IoError
        when the directory cannot be created or written
    """
    written = []
    try:
        os.makedirs(output_dir, exist_ok=True)
        path = os.path.join(output_dir, 'report.json')
        _write_json(path, report.to_dict())
        written.append(path)
        path = os.path.join(output_dir, 'timings.json')
        _write_json(path, report.timings)
        written.append(path)
        for name in sorted(report.curves):
            curve = report.curves[name]
            df = pd.DataFrame({'r': np.asarray(curve.nodes), 'value': np.asarray(curve.values)})
            path = os.path.join(output_dir, '%s.csv' % name)
            df.to_csv(path, index=False, float_format='%.17g')
            written.append(path)
        if report.rates is not None:
            df = pd.DataFrame(report.rates, columns=RATES_COLUMNS)
            path = os.path.join(output_dir, 'rates.csv')
            df.to_csv(path, index=False, float_format='%.17g')
            written.append(path)
    except OSError as err:
        msg = "Cannot write the report to '%s': %s" % (str(output_dir), str(err))
        raise IoError(msg)
    return written
