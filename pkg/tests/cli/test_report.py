import json
import os
import numpy as np
import pandas as pd
import pytest

from bubblelab.core import make_grid
from bubblelab.core import RadialField
from bubblelab.cli import Report
from bubblelab.cli.report import check_le, check_ge, check_in, emit, jsonable, RATES_COLUMNS
from bubblelab.utils import IoError


@pytest.fixture()
def report():
    rep = Report('blowup-rate', '0.1.0', {'eps_list': [0.2, 0.1, 0.05]}, 'abc')
    rep.results['fit'] = {'slope': np.float64(2.0), 'bad': float('nan')}
    rep.checks.append(check_in('deviation_rate', 2.01, 1.8, 2.2))
    rep.checks.append(check_le('residual', 1e-6, 1e-4))
    rep.curves['v'] = RadialField.from_function(make_grid(1.0, 4), lambda r: 1.0 - r / 2)
    rep.rates = [{'eps': 0.2, 'deviation': 0.04, 'hyp_product': 1.0, 'a_decay_slope': -4.0}]
    rep.timings['family'] = 0.5
    return rep


def test_checks():
    assert check_le('a', 1.0, 1.0).passed
    assert not check_le('a', 1.1, 1.0).passed
    assert check_ge('b', 0.2, 0.1).passed
    c = check_in('c', 2.5, 1.8, 2.2)
    assert not c.passed
    assert c.line().startswith('FAIL  c:')
    assert c.to_dict()['tolerance'] == [1.8, 2.2]


def test_report_passed(report):
    assert report.passed
    report.checks.append(check_le('extra', 1.0, 0.0))
    assert not report.passed
    assert report.failed_checks() == ['extra']


def test_jsonable():
    out = jsonable({'a': np.arange(2), 'b': np.float32(0.5), 'c': float('inf'), 'd': (np.bool_(True), None)})
    assert out == {'a': [0, 1], 'b': 0.5, 'c': 'inf', 'd': [True, None]}


def test_emit(tmpdir, report):
    out = os.path.join(str(tmpdir), 'run')
    written = emit(report, out)
    names = sorted(os.path.basename(p) for p in written)
    assert names == ['rates.csv', 'report.json', 'timings.json', 'v.csv']
    with open(os.path.join(out, 'report.json')) as f:
        data = json.load(f)
    assert data['passed'] is True
    assert data['results']['fit'] == {'bad': 'nan', 'slope': 2.0}
    assert data['config_hash'] == 'abc'
    curve = pd.read_csv(os.path.join(out, 'v.csv'))
    assert list(curve.columns) == ['r', 'value']
    assert np.allclose(curve['value'], [1.0, 0.875, 0.75, 0.625, 0.5])
    rates = pd.read_csv(os.path.join(out, 'rates.csv'))
    assert list(rates.columns) == RATES_COLUMNS


def test_emit_exception(tmpdir, report):
    blocker = os.path.join(str(tmpdir), 'file')
    with open(blocker, 'w') as f:
        f.write('x')
    with pytest.raises(IoError):
        emit(report, os.path.join(blocker, 'run'))
