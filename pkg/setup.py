#!/usr/bin/env python

from setuptools import setup

setup(name='eprop',
      description='Finite-horizon diagnostics of the e-property and '
                  'asymptotic stability of Markov operators',
      version='0.1.0',

      packages=['eprop', 'eprop.space', 'eprop.operator', 'eprop.flatmetric',
                'eprop.diagnostics', 'eprop.decomposition', 'eprop.tests',
                'eprop.utils'],
      scripts=['run_example.py', 'diagnose.py', 'decompose.py',
               'check_stability.py'],
      install_requires=['torch>=1.9', 'tqdm', 'configargparse', 'PyYAML'],
      extras_require={'tensorboard': ['tensorboardX']})
