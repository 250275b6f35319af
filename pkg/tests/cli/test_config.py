import json
import os
import pytest

from bubblelab.core import ModelParams
from bubblelab.cli import ExperimentConfig
from bubblelab.cli import EXPERIMENTS
from bubblelab.utils import ConfigError


@pytest.fixture()
def config_file(tmpdir):
    path = os.path.join(str(tmpdir), 'config.json')
    with open(path, 'w') as f:
        json.dump({'params': {'n': 5, 'Q': 15.0}, 'tolerances': {'residual': 1e-4}}, f)
    return path


def test_load_presets():
    for name in EXPERIMENTS:
        config = ExperimentConfig.load(name)
        assert config.experiment == name
        assert isinstance(config.params, ModelParams)
        assert len(config.tolerances) > 0


def test_load_file_and_overrides(config_file):
    config = ExperimentConfig.load('bubble-check', config_file, ['params.ell=1.5', 'options.fd_order=2'], 'out')
    assert config.params.n == 5
    assert config.params.Q == 15.0
    assert config.params.ell == 1.5
    assert config.options['fd_order'] == 2
    assert config.tolerance('residual') == 1e-4
    # preset tolerances not named in the file survive
    assert config.tolerance('order_band') == 0.2
    assert config.output_dir == 'out'
    assert config.make_grid().N == 4000


def test_config_hash():
    a = ExperimentConfig.load('shoot')
    b = ExperimentConfig.load('shoot')
    c = ExperimentConfig.load('shoot', overrides=['tolerances.profile=1e-3'])
    assert a.config_hash() == b.config_hash()
    assert a.config_hash() != c.config_hash()
    assert a.to_dict()['tolerances']['profile'] == 1e-6


@pytest.mark.parametrize('overrides', [
    ['eps_list=[0.2, 0.1]'],
    ['eps_list=[0.1, 0.2, 0.05]'],
    ['eps_list=[0.2, 0.1, -0.05]'],
    ['options.fd_order=3'],
    ['params.n=2'],
    ['params.lambda=2'],
    ['grid.N=1'],
    ['tolerances.rate_band=wide'],
    ['perturbation.center=0.1'],
    ['noequals'],
])
def test_invalid_overrides(overrides):
    with pytest.raises(ConfigError):
        ExperimentConfig.load('blowup-rate', overrides=overrides)


def test_config_exception(tmpdir):
    with pytest.raises(ConfigError):
        ExperimentConfig.load('no-such-experiment')
    with pytest.raises(ConfigError):
        ExperimentConfig.load('shoot', os.path.join(str(tmpdir), 'missing.json'))
    bad = os.path.join(str(tmpdir), 'bad.json')
    with open(bad, 'w') as f:
        f.write('{not json')
    with pytest.raises(ConfigError):
        ExperimentConfig.load('shoot', bad)
    unknown = os.path.join(str(tmpdir), 'unknown.json')
    with open(unknown, 'w') as f:
        json.dump({'solver': {}}, f)
    with pytest.raises(ConfigError):
        ExperimentConfig.load('shoot', unknown)


def test_missing_tolerance():
    config = ExperimentConfig.from_dict({'experiment': 'shoot'})
    with pytest.raises(ConfigError):
        config.tolerance('profile')
