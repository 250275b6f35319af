import pytest

from bubblelab.utils import isfloat
from bubblelab.utils import isint
from bubblelab.utils import value
from bubblelab.utils import update_default_kwargs
from bubblelab.utils import set_dotted
from bubblelab.utils import ConfigError


@pytest.fixture()
def config():
    return {'params': {'n': 6, 'ell': 1.0}, 'tolerances': {}, 'eps_list': [0.2, 0.1, 0.05]}


def test_isfloat_exception():
    assert isfloat('1') is True
    assert isfloat('1e-5') is True
    assert isfloat('a') is False
    assert isfloat(None) is False


def test_isint_exception():
    assert isint('1') is True
    assert isint(1) is True
    assert isint('a') is False


def test_value():
    assert value('1') == 1
    assert value('1e-5') == 1e-5
    assert value('[0.2, 0.1]') == [0.2, 0.1]
    assert value('true') is True
    assert value('False') is False
    assert value('null') is None
    assert value('geometric') == 'geometric'


def test_update_default_kwargs():
    default_kw = {'a': 4, 'b': 7, 'c': {'d': 1, 'e': 2}}
    kw = {'a': 5, 'c': {'e': 3}}
    full_dict = update_default_kwargs(default_kw, kw)
    assert full_dict['a'] == 5
    assert full_dict['c'] == {'d': 1, 'e': 3}
    # the defaults are not touched
    assert default_kw['c']['e'] == 2
    full_dict = update_default_kwargs(default_kw, {})
    assert full_dict['a'] == 4


def test_update_default_kwargs_exception():
    default_kw = {'a': 4, 'b': 7, 'c': 8}
    kw = {'l': 5}
    with pytest.raises(ConfigError):
        _ = update_default_kwargs(default_kw, kw)
    with pytest.raises(ValueError):
        _ = update_default_kwargs(default_kw, kw, 'function', 'https://...')


def test_set_dotted(config):
    set_dotted(config, 'params.n=5')
    set_dotted(config, 'tolerances.residual=1e-5')
    set_dotted(config, 'eps_list=[0.4, 0.2, 0.1]')
    assert config['params']['n'] == 5
    assert config['tolerances']['residual'] == 1e-5
    assert config['eps_list'] == [0.4, 0.2, 0.1]


def test_set_dotted_exception(config):
    with pytest.raises(ConfigError):
        set_dotted(config, 'params.n')
    with pytest.raises(ConfigError):
        set_dotted(config, '=3')
    with pytest.raises(ConfigError):
        set_dotted(config, 'eps_list.first=0.1')
