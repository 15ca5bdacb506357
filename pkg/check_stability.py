#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Stability traces of a model from every Dirac start."""
import sys

import eprop.opts as opts
from eprop.cli import cmd_check_stability, run_command
from eprop.utils.parse import ArgumentParser


def main(opt):
    return run_command(cmd_check_stability, opt)


def _get_parser():
    parser = ArgumentParser(description='check_stability.py')

    opts.config_opts(parser)
    opts.model_opts(parser)
    opts.stability_opts(parser)
    opts.output_opts(parser)
    return parser


if __name__ == "__main__":
    parser = _get_parser()

    opt = parser.parse_args()
    sys.exit(main(opt))
