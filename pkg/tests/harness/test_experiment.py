import numpy as np
import pytest

from bubblelab.core import make_grid
from bubblelab.core import ModelParams
from bubblelab.riesz import RingKernelTable
from bubblelab.harness import Perturbation
from bubblelab.harness import family_member
from bubblelab.harness import blowup_rate_experiment
from bubblelab.utils import InsufficientData
from bubblelab.utils import InvalidParams


@pytest.fixture(scope='module')
def params():
    return ModelParams(n=6, ell=1.0, Q=24.0, delta=0.5)


@pytest.fixture(scope='module')
def table(params):
    return RingKernelTable.build(make_grid(100.0, 400, 'geometric'), params.n, params.ell)


@pytest.fixture(scope='module')
def experiment(params, table):
    return blowup_rate_experiment([0.2, 0.1, 0.05], Perturbation(), params, table=table)


def test_perturbation():
    bump = Perturbation(2.0, 1.0, 0.5)
    assert bump(1.0) == pytest.approx(2.0)
    assert bump(0.4) == 0.0
    assert bump(1.6) == 0.0
    assert Perturbation.from_value(None).amplitude == 0.0
    assert Perturbation.from_value({'amplitude': 3.0}).amplitude == 3.0
    assert Perturbation.from_value((1.0, 2.0, 1.0)).center == 2.0
    with pytest.raises(InvalidParams):
        Perturbation(1.0, 0.5, 0.5)
    with pytest.raises(InvalidParams):
        Perturbation(1.0, 1.0, 0.0)


def test_family_member(params, table):
    rec = family_member(0.1, params, table, Perturbation())
    assert rec.eps == pytest.approx(0.1)
    assert rec.v.values[0] == 1.0
    assert rec.rescaled_residual <= 1e-4
    # A = c eps^2 max phi
    assert rec.deviation_A == pytest.approx(0.01, rel=0.05)
    assert rec.argmax_y == pytest.approx(1.0, abs=0.1)
    assert rec.lam == pytest.approx(5.0)
    assert rec.quot_sup > 0
    summary = rec.summary()
    assert summary['v0'] == 1.0
    assert summary['v_max'] == 1.0
    assert -4.3 <= summary['a_decay_slope'] <= -3.7


def test_blowup_rate(experiment):
    assert not experiment.degenerate
    assert experiment.fit.slope == pytest.approx(2.0, abs=1e-6)
    assert experiment.c2_fit.slope == pytest.approx(2.0, abs=0.2)
    assert experiment.sigma_fit.slope == pytest.approx(2.0, abs=0.2)
    # A / eps^{2.5} grows like eps^{-0.5}
    assert experiment.improved_fit.slope == pytest.approx(-0.5, abs=1e-6)
    assert [r.eps for r in experiment.records] == pytest.approx([0.2, 0.1, 0.05])
    for rec in experiment.records:
        assert rec.rescaled_residual <= 1e-4
        assert np.max(rec.v.values) == 1.0


def test_rates_rows(experiment):
    rows = experiment.rates_rows()
    assert len(rows) == 3
    assert set(rows[0]) == {'eps', 'deviation', 'hyp_product', 'a_decay_slope'}


def test_degenerate_family(params, table):
    with pytest.warns(RuntimeWarning):
        res = blowup_rate_experiment([0.2, 0.1, 0.05], None, params, table=table)
    assert res.degenerate
    assert res.fit is None
    for rec in res.records:
        assert rec.deviation_A <= 1e-10


def test_skipped_members(params, table):
    # c eps^2 phi exceeds the height at the origin for the two coarse scales
    with pytest.warns(RuntimeWarning):
        res = blowup_rate_experiment([0.2, 0.1, 0.05], Perturbation(100.0), params, table=table)
    assert res.skipped == [0.2, 0.1]
    assert len(res.records) == 1
    assert res.fit is None


def test_parallel_members(params, table, experiment):
    res = blowup_rate_experiment([0.2, 0.1, 0.05], Perturbation(), params, table=table, n_jobs=2)
    assert [r.deviation_A for r in res.records] == pytest.approx([r.deviation_A for r in experiment.records])


def test_blowup_rate_exception(params, table):
    with pytest.raises(InsufficientData):
        blowup_rate_experiment([0.2, 0.1], Perturbation(), params, table=table)
    with pytest.raises(InvalidParams):
        blowup_rate_experiment([0.1, 0.2, 0.05], Perturbation(), params, table=table)
    with pytest.raises(InvalidParams):
        blowup_rate_experiment([0.2, 0.1, 0.0], Perturbation(), params, table=table)
