from __future__ import annotations

import copy
import hashlib
import json
import os
from dataclasses import dataclass

from bubblelab.core.params import ModelParams
from bubblelab.core.grid import make_grid
from bubblelab.harness.experiment import Perturbation
from bubblelab.datasets.base import load_config_preset
from bubblelab.utils.exceptions import BubbleLabError, ConfigError
from bubblelab.utils.validation import update_default_kwargs, set_dotted, isfloat


EXPERIMENTS = ('bubble-check', 'riesz-check', 'shoot', 'manufacture', 'solve', 'blowup-rate', 'hypotheses',
               'energy')

DEFAULT_CONFIG = {
    'experiment': None,
    'params': ModelParams().to_dict(),
    'grid': {'r_max': 20.0, 'N': 4000, 'scheme': 'uniform', 'stretch': None},
    'eps_list': [0.2, 0.1, 0.05, 0.025],
    'perturbation': {'amplitude': 1.0, 'center': 1.0, 'width': 0.5},
    'tolerances': {},
    'options': {'fd_order': 4,
                'n_jobs': 1,
                'oracle_M': 64,
                'oracle_box': 10.0,
                'v0': 1.0,
                'lambdas': [0.5, 2.0],
                'cases': [[6, 24.0], [3, 3.0]],
                'tau': 0.5,
                'tol': 1e-8,
                'max_iter': 100,
                'guess_factor': 1.1,
                'ells': [0.5, 1.0, 1.5],
                'scaling_ells': [0.5, 1.0],
                'scaling_eps': [1.0, 0.5, 0.25],
                'profiles': ['bubble', 'bump'],
                'refinement': [1000, 2000, 4000],
                'delta': 0.0,
                'y_max': None,
                'y_N': 1000,
                'decay_rho': 10.0,
                'aux_grid': {'r_max': 100.0, 'N': 1500, 'scheme': 'geometric', 'stretch': None},
                'verbose': False},
    'output_dir': 'bubble-lab-out',
}


@dataclass
class ExperimentConfig(object):
    """
    a validated experiment configuration

    Parameters
    ----------
    experiment: str
        one of EXPERIMENTS

    params: ModelParams

    grid: dict
        r_max, N, scheme and stretch of make_grid

    eps_list: list of float

    perturbation: Perturbation

    tolerances: dict
        name -> float, every check reads its tolerance from here

    options: dict
        numerical options of the experiments

    output_dir: str

    raw: dict
        the fully merged json form, echoed into the report
    """
    experiment: str
    params: ModelParams
    grid: dict
    eps_list: list
    perturbation: Perturbation
    tolerances: dict
    options: dict
    output_dir: str
    raw: dict

    @classmethod
    def from_dict(cls, d):
        """
        validate a merged configuration dictionary

        Raises
        ------
        ConfigError
            for an unknown experiment, bad parameters, a bad grid, too few scales or a non-numeric tolerance
        """
        d = update_default_kwargs(DEFAULT_CONFIG, d, 'ExperimentConfig')
        name = d['experiment']
        if name not in EXPERIMENTS:
            msg = "Unknown experiment '%s'. Legit experiments are: %s" % (str(name), ', '.join(EXPERIMENTS))
            raise ConfigError(msg)
        try:
            params = ModelParams.from_dict(d['params'])
            grid = d['grid']
            make_grid(grid['r_max'], grid['N'], grid['scheme'], grid['stretch'])
            perturbation = Perturbation.from_value(d['perturbation'])
        except ConfigError:
            raise
        except (BubbleLabError, TypeError) as err:
            msg = "Invalid configuration for '%s': %s" % (name, str(err))
            raise ConfigError(msg)
        eps_list = d['eps_list']
        if not isinstance(eps_list, list) or not all(isfloat(e) and float(e) > 0 for e in eps_list):
            msg = "'eps_list' must be a list of positive numbers, got %s." % str(eps_list)
            raise ConfigError(msg)
        if name == 'blowup-rate':
            if len(eps_list) < 3:
                msg = "The blow-up rate needs at least 3 values in 'eps_list', got %i." % len(eps_list)
                raise ConfigError(msg)
            if any(b >= a for a, b in zip(eps_list[:-1], eps_list[1:])):
                msg = "'eps_list' must be strictly decreasing, got %s." % str(eps_list)
                raise ConfigError(msg)
        for key, tol in d['tolerances'].items():
            if isinstance(tol, bool) or not isfloat(tol):
                msg = "The tolerance '%s' must be a number, got %s." % (key, str(tol))
                raise ConfigError(msg)
        if d['options']['fd_order'] not in (2, 4):
            msg = "'options.fd_order' must be 2 or 4, got %s." % str(d['options']['fd_order'])
            raise ConfigError(msg)
        return cls(name, params, dict(d['grid']), [float(e) for e in eps_list], perturbation,
                   dict((k, float(v)) for k, v in d['tolerances'].items()), dict(d['options']),
                   str(d['output_dir']), d)

    @classmethod
    def load(cls, experiment, path=None, overrides=(), output_dir=None):
        """
        merge the packaged preset, a json file and command line overrides

        Parameters
        ----------
        experiment: str

        path: str, optional (default=None)
            json config file

        overrides: sequence of str, optional (default=())
            'dotted.key=value' assignments applied last

        output_dir: str, optional (default=None)

        Returns
        -------
        ExperimentConfig
        """
        if experiment not in EXPERIMENTS:
            msg = "Unknown experiment '%s'. Legit experiments are: %s" % (str(experiment), ', '.join(EXPERIMENTS))
            raise ConfigError(msg)
        merged = update_default_kwargs(DEFAULT_CONFIG, load_config_preset(experiment), 'preset %s' % experiment)
        if path is not None:
            if not os.path.isfile(path):
                msg = "The config file '%s' does not exist." % path
                raise ConfigError(msg)
            with open(path, encoding='utf-8') as f:
                try:
                    user = json.load(f)
                except ValueError as err:
                    msg = "The config file '%s' is not valid json: %s" % (path, str(err))
                    raise ConfigError(msg)
            if not isinstance(user, dict):
                msg = "The config file '%s' must hold a json object." % path
                raise ConfigError(msg)
            merged = update_default_kwargs(merged, user, 'ExperimentConfig')
        merged['experiment'] = experiment
        for assignment in overrides:
            set_dotted(merged, assignment)
        if output_dir is not None:
            merged['output_dir'] = output_dir
        return cls.from_dict(merged)

    def tolerance(self, name):
        """ the tolerance of a check; a missing tolerance is a configuration error """
        if name not in self.tolerances:
            msg = "The experiment '%s' needs the tolerance 'tolerances.%s'." % (self.experiment, name)
            raise ConfigError(msg)
        return self.tolerances[name]

    def make_grid(self):
        g = self.grid
        return make_grid(g['r_max'], g['N'], g['scheme'], g['stretch'])

    def to_dict(self):
        return copy.deepcopy(self.raw)

    def config_hash(self):
        """ sha256 of the canonical json form """
        text = json.dumps(self.raw, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(text.encode('utf-8')).hexdigest()
