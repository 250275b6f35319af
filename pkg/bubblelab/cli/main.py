from __future__ import annotations

import argparse
import sys
import time

from bubblelab import __version__
from bubblelab.cli.config import EXPERIMENTS, ExperimentConfig
from bubblelab.cli.experiments import RUNNERS
from bubblelab.cli.report import Report, emit
from bubblelab.utils.exceptions import BubbleLabError, ConfigError, ExperimentFailure, IoError
from bubblelab.utils.utilities import tot_exec_time_str


EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2


def run(config, output_dir=None):
    """
    run one experiment and write its report

    Parameters
    ----------
    config: ExperimentConfig

    output_dir: str, optional (default=None)
        overrides config.output_dir

    Returns
    -------
    Report

    Raises
    ------
    ExperimentFailure
        after the report is written, naming the checks that failed
    """
    time_start = time.time()
    report = Report(config.experiment, __version__, config.to_dict(), config.config_hash())
    RUNNERS[config.experiment](config, report)
    report.timings['total'] = time.time() - time_start
    for check in report.checks:
        print(check.line())
    emit(report, config.output_dir if output_dir is None else output_dir)
    print(tot_exec_time_str(time_start))
    if not report.passed:
        msg = "The experiment '%s' failed the checks: %s" % (config.experiment, ', '.join(report.failed_checks()))
        raise ExperimentFailure(msg)
    return report


def build_parser():
    parser = argparse.ArgumentParser(prog='bubble-lab',
                                     description='Numerical laboratory for bubbling solutions of the critical '
                                                 'Schrodinger-Newton equation.')
    parser.add_argument('experiment', help='one of: %s' % ', '.join(EXPERIMENTS))
    parser.add_argument('--config', default=None, help='json config file merged over the packaged preset')
    parser.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                        help='override one config key, e.g. --set params.n=6 (repeatable)')
    parser.add_argument('--out', default=None, help='output directory (default: output_dir of the config)')
    parser.add_argument('--version', action='version', version='bubble-lab %s' % __version__)
    return parser


def main(argv=None):
    """ console entry point; returns the exit code (0 pass, 1 failed check or error, 2 bad config) """
    args = build_parser().parse_args(argv)
    try:
        config = ExperimentConfig.load(args.experiment, args.config, args.overrides, args.out)
    except ConfigError as err:
        print('config error: %s' % str(err), file=sys.stderr)
        return EXIT_CONFIG
    try:
        run(config)
    except ConfigError as err:
        print('config error: %s' % str(err), file=sys.stderr)
        return EXIT_CONFIG
    except ExperimentFailure as err:
        print(str(err), file=sys.stderr)
        return EXIT_FAIL
    except IoError as err:
        print('io error: %s' % str(err), file=sys.stderr)
        return EXIT_FAIL
    except BubbleLabError as err:
        print('experiment error (%s): %s' % (type(err).__name__, str(err)), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS


if __name__ == '__main__':
    sys.exit(main())
