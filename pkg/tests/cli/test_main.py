import json
import os
import pytest

from bubblelab.cli import ExperimentConfig
from bubblelab.cli.main import main, run, build_parser
from bubblelab.utils import ConfigError
from bubblelab.utils import ExperimentFailure


def _report(out):
    with open(os.path.join(out, 'report.json')) as f:
        return json.load(f)


def test_parser():
    args = build_parser().parse_args(['shoot', '--set', 'params.n=5', '--set', 'grid.N=100', '--out', 'x'])
    assert args.experiment == 'shoot'
    assert args.overrides == ['params.n=5', 'grid.N=100']
    assert args.out == 'x'
    with pytest.raises(SystemExit):
        build_parser().parse_args(['--version'])


def test_bubble_check(tmpdir):
    out = str(tmpdir)
    assert main(['bubble-check', '--out', out]) == 0
    data = _report(out)
    assert data['passed'] is True
    assert data['config']['tolerances']['residual'] == 1e-5
    names = [c['name'] for c in data['checks']]
    assert 'convergence_order' in names
    assert 'translation_mode_residual' in names
    for name in ('Z.csv', 'residual.csv', 'timings.json'):
        assert os.path.exists(os.path.join(out, name))


def test_shoot(tmpdir):
    out = str(tmpdir)
    assert main(['shoot', '--out', out]) == 0
    assert 'n6_Q24.0' in _report(out)['results']['shots']


def test_failed_check(tmpdir):
    out = str(tmpdir)
    assert main(['shoot', '--set', 'tolerances.profile=0.0', '--out', out]) == 1
    data = _report(out)
    assert data['passed'] is False


def test_config_errors(tmpdir):
    out = str(tmpdir)
    assert main(['no-such-experiment', '--out', out]) == 2
    assert main(['blowup-rate', '--set', 'eps_list=[0.2,0.1]', '--out', out]) == 2
    assert main(['bubble-check', '--set', 'options.fd_order=3', '--out', out]) == 2
    assert main(['shoot', '--config', os.path.join(out, 'missing.json'), '--out', out]) == 2


def test_io_error(tmpdir):
    blocker = os.path.join(str(tmpdir), 'file')
    with open(blocker, 'w') as f:
        f.write('x')
    assert main(['shoot', '--set', 'options.cases=[[6, 24.0]]', '--out', os.path.join(blocker, 'run')]) == 1


def test_run(tmpdir):
    config = ExperimentConfig.load('shoot', overrides=['options.cases=[[6, 24.0]]'])
    report = run(config, str(tmpdir))
    assert report.passed
    assert 'total' in report.timings
    missing = ExperimentConfig.from_dict({'experiment': 'shoot', 'options': {'cases': [[6, 24.0]]},
                                          'grid': {'r_max': 20.0, 'N': 2000}})
    with pytest.raises(ConfigError):
        run(missing, str(tmpdir))
    strict = ExperimentConfig.load('shoot', overrides=['tolerances.family=0.0'])
    with pytest.raises(ExperimentFailure):
        run(strict, str(tmpdir))


def test_riesz_check(tmpdir):
    out = str(tmpdir)
    assert main(['riesz-check', '--out', out]) == 0
    data = _report(out)
    assert data['passed'] is True
    errors = data['results']['oracle_rel_errors']
    assert sorted(errors) == sorted('%s_ell%s' % (p, e) for p in ('bubble', 'bump') for e in (0.5, 1.0, 1.5))
    assert os.path.exists(os.path.join(out, 'q_Z.csv'))


def test_report_is_deterministic(tmpdir):
    outputs = []
    out = str(tmpdir)
    for _ in range(2):
        assert main(['shoot', '--set', 'options.cases=[[6, 24.0]]', '--out', out]) == 0
        with open(os.path.join(out, 'report.json'), 'rb') as f:
            outputs.append(f.read())
    assert outputs[0] == outputs[1]
