""" Implementation of all available options """
from __future__ import print_function

import logging

import configargparse

from eprop.diagnostics import DEFAULT_TOL
from eprop.space import str2builder

PROFILES = ["eproperty", "cesaro", "stability", "liminf-ball", "lemma-ball",
            "feller"]


def config_opts(parser):
    parser.add('-config', '--config', required=False,
               is_config_file_arg=True, help='config file path')
    parser.add('-save_config', '--save_config', required=False,
               is_write_out_config_file_arg=True,
               help='config file save path')


def model_opts(parser, source=True):
    """
    Where the chain comes from: a built-in family or a model document.
    """
    group = parser.add_argument_group('Model')
    if source:
        group.add('--model', '-model', type=str, required=True,
                  help="Built-in model (%s) or path to a JSON/YAML model "
                       "document." % ", ".join(sorted(str2builder)))
    group.add('--m_max', '-m_max', '--m-max', type=int, default=100,
              help="example1: largest m of the points 1/m.")
    group.add('--primes', '-primes', type=int, nargs='+',
              default=[2, 3, 5, 7, 11, 13],
              help="example2: primes indexing the sequence blocks.")
    group.add('--halfmap_depth', '-halfmap_depth', '--halfmap-depth',
              type=int, default=20,
              help="halfmap: smallest point is 2^-depth.")


def observable_opts(parser):
    group = parser.add_argument_group('Observable')
    group.add('--f', '-f', type=str, default=None,
              help="Built-in observable (identity_on_norm, min1_2norm, "
                   "constant) or path to an observable document. Defaults "
                   "to the canonical observable of the model.")


def probe_opts(parser):
    group = parser.add_argument_group('Probes')
    group.add('--z', '-z', type=int, default=None,
              help="Target state id.")
    group.add('--probes', '-probes', type=int, nargs='+', default=None,
              help="Probe state ids ordered by decreasing distance to the "
                   "target. Defaults to the model's probe ladder.")
    group.add('--horizon', '-horizon', type=int, default=200,
              help="Last iterate N of the tail window.")
    group.add('--tail_start', '-tail_start', '--tail-start', type=int,
              default=-1,
              help="First iterate N0 of the tail window; -1 for N/2.")
    group.add('--tol', '-tol', type=float, default=DEFAULT_TOL,
              help="Verdict tolerance.")


def diagnose_opts(parser):
    group = parser.add_argument_group('Diagnose')
    group.add('--profile', '-profile', required=True, choices=PROFILES,
              help="Profile to compute.")
    group.add('--r', '-r', type=str, default=None,
              help="liminf-ball: radius of B(z, r), e.g. 0.25 or 1/4.")
    group.add('--start', '-start', type=int, default=None,
              help="stability / liminf-ball: start at delta_start instead "
                   "of the uniform measure.")
    group.add('--eps', '-eps', type=float, default=0.1,
              help="lemma-ball: oscillation level.")


def decomposition_opts(parser):
    group = parser.add_argument_group('Decomposition')
    group.add('--x0', '-x0', type=int, default=None,
              help="Starting state; defaults to the state farthest "
                   "from z.")
    group.add('--z', '-z', type=int, default=None,
              help="Centre of the target ball; defaults to the origin.")
    group.add('--r', '-r', type=str, default=None,
              help="Radius of B(z, r); defaults to half the smallest "
                   "positive distance from z.")
    group.add('--alpha', '-alpha', type=str, default=None,
              help="Mass threshold in (0, gamma), e.g. 1/6; defaults to "
                   "gamma / 2.")
    group.add('--k', '-k', type=int, default=None,
              help="Number of levels; defaults to the smallest k with "
                   "2 (1-alpha)^k |f| < eps.")
    group.add('--n_search', '-n_search', '--n-search', type=int,
              default=100,
              help="Largest step count tried per level.")
    group.add('--eps', '-eps', type=float, default=0.05,
              help="Target accuracy for k and the lemma ball.")
    group.add('--extra_steps', '-extra_steps', '--extra-steps', type=int,
              default=0,
              help="Also check the identity this many steps further.")
    group.add('--probes', '-probes', type=int, nargs='+', default=None,
              help="Probes for the continuity scan; defaults to all "
                   "states by decreasing distance to x0.")
    group.add('--horizon', '-horizon', type=int, default=200,
              help="Last iterate of the contradiction check.")
    group.add('--tail_start', '-tail_start', '--tail-start', type=int,
              default=-1,
              help="First iterate of the contradiction check; -1 for N/2.")


def run_example_opts(parser):
    group = parser.add_argument_group('Example')
    group.add('name', choices=sorted(str2builder),
              help="Built-in example whose canonical bundle is run.")


def stability_opts(parser):
    group = parser.add_argument_group('Stability')
    group.add('--n_max', '-n_max', '--n-max', type=int, default=200,
              help="Number of iterates per start state.")
    group.add('--tol', '-tol', type=float, default=DEFAULT_TOL,
              help="Distance below which a start counts as converged.")


def output_opts(parser):
    group = parser.add_argument_group('Output')
    group.add('--out', '-out', type=str, default="reports",
              help="Directory receiving the reports.")
    group.add('--format', '-format', default="csv", choices=["csv", "json"],
              help="Report format.")
    group.add('--tensorboard', '-tensorboard', action="store_true",
              help="Mirror stability traces to tensorboardX.")
    group.add('--tensorboard_log_dir', '-tensorboard_log_dir', type=str,
              default="runs/eprop",
              help="Log directory for tensorboardX.")

    group = parser.add_argument_group('Logging')
    group.add('--log_file', '-log_file', type=str, default="",
              help="Output logs to a file under this path.")
    group.add('--log_file_level', '-log_file_level', type=str,
              action=StoreLoggingLevelAction,
              choices=StoreLoggingLevelAction.CHOICES,
              default="0")
    group.add('--verbose', '-verbose', action="store_true",
              help="Debug logging and progress bars.")


class StoreLoggingLevelAction(configargparse.Action):
    """ Convert string to logging level """
    LEVELS = {
        "CRITICAL": logging.CRITICAL,
        "ERROR": logging.ERROR,
        "WARNING": logging.WARNING,
        "INFO": logging.INFO,
        "DEBUG": logging.DEBUG,
        "NOTSET": logging.NOTSET
    }

    CHOICES = list(LEVELS.keys()) + [str(_) for _ in LEVELS.values()]

    def __init__(self, option_strings, dest, help=None, **kwargs):
        super(StoreLoggingLevelAction, self).__init__(
            option_strings, dest, help=help, **kwargs)

    def __call__(self, parser, namespace, value, option_string=None):
        level = StoreLoggingLevelAction.LEVELS.get(value, value)
        setattr(namespace, self.dest, level)
