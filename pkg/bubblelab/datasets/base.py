from __future__ import print_function
import json
import os
import pkg_resources

from bubblelab.utils.exceptions import ConfigError


def _preset_dir():
    return pkg_resources.resource_filename('bubblelab', os.path.join('datasets', 'data', 'configs'))


def list_config_presets():
    """Return the names of the packaged experiment presets.

    Returns
    -------
    list of str
        sorted experiment names, e.g. 'bubble-check'

    Examples
    --------
    >>> from bubblelab.datasets import list_config_presets
    >>> 'blowup-rate' in list_config_presets()
    True
    """
    names = [f[:-len('.json')] for f in os.listdir(_preset_dir()) if f.endswith('.json')]
    return sorted(names)


def load_config_preset(name):
    """Load the packaged json preset of an experiment.

    A preset holds the grid, model parameters, options and every tolerance the experiment checks.

    =================   ==========================================
    file                datasets/data/configs/<name>.json
    keys                subset of the experiment config keys
    Returns             dict
    =================   ==========================================

    Parameters
    ----------
    name: str
        the experiment name

    Returns
    -------
    dict

    Examples
    --------
    >>> from bubblelab.datasets import load_config_preset
    >>> preset = load_config_preset('bubble-check')
    >>> preset['tolerances']['residual']
    1e-05
    """
    DATA_PATH = os.path.join(_preset_dir(), '%s.json' % name)
    if not os.path.isfile(DATA_PATH):
        msg = "There is no preset for the experiment '%s'. Available presets: %s" \
              % (str(name), ', '.join(list_config_presets()))
        raise ConfigError(msg)
    with open(DATA_PATH, encoding='utf-8') as f:
        return json.load(f)
