#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Run the canonical diagnostic bundle of a built-in example."""
import sys

import eprop.opts as opts
from eprop.cli import cmd_run_example, run_command
from eprop.utils.parse import ArgumentParser


def main(opt):
    return run_command(cmd_run_example, opt)


def _get_parser():
    parser = ArgumentParser(description='run_example.py')

    opts.config_opts(parser)
    opts.run_example_opts(parser)
    opts.model_opts(parser, source=False)
    opts.observable_opts(parser)
    opts.output_opts(parser)
    return parser


if __name__ == "__main__":
    parser = _get_parser()

    opt = parser.parse_args()
    sys.exit(main(opt))
