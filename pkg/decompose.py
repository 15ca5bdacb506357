#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Decompose P^n delta_x0 and verify the construction."""
import sys

import eprop.opts as opts
from eprop.cli import cmd_decompose, run_command
from eprop.utils.parse import ArgumentParser


def main(opt):
    return run_command(cmd_decompose, opt)


def _get_parser():
    parser = ArgumentParser(description='decompose.py')

    opts.config_opts(parser)
    opts.model_opts(parser)
    opts.observable_opts(parser)
    opts.decomposition_opts(parser)
    opts.output_opts(parser)
    return parser


if __name__ == "__main__":
    parser = _get_parser()

    opt = parser.parse_args()
    sys.exit(main(opt))
