import unittest
from fractions import Fraction

import torch

from eprop.measure import (
    DiscreteMeasure, MeasureDomainError, ball_mass, combine, dirac,
    max_deviation, pair, residual, restrict_normalize, support)
from eprop.operator import from_values, identity_on_norm
from eprop.space import Ball, build_example1

from eprop.tests.utils_for_tests import product_dict, random_values


class TestDiscreteMeasure(unittest.TestCase):
    def test_zero_weights_dropped(self):
        mu = DiscreteMeasure({3: Fraction(1, 2), 1: 0, 0: Fraction(1, 2)})
        self.assertEqual(mu.states(), [0, 3])
        self.assertEqual(support(mu), {0, 3})
        self.assertTrue(mu.is_probability())

    def test_negative_weight_rejected(self):
        with self.assertRaises(ValueError):
            DiscreteMeasure({0: -0.1})

    def test_duplicate_atom_rejected(self):
        with self.assertRaises(ValueError):
            DiscreteMeasure([(0, 0.5), (0, 0.5)])

    def test_json(self):
        mu = DiscreteMeasure({2: 0.25, 5: 0.75})
        self.assertEqual(DiscreteMeasure.from_json(mu.to_json()), mu)


class TestMeasureAlgebra(unittest.TestCase):
    def setUp(self):
        self.model = build_example1(10)
        self.mu = DiscreteMeasure({0: Fraction(1, 4), 5: Fraction(1, 4),
                                   10: Fraction(1, 2)})

    def test_ball_mass(self):
        ball = Ball(0, Fraction(1, 5))
        self.assertEqual(ball_mass(self.mu, ball, self.model),
                         Fraction(3, 4))

    def test_restrict_normalize(self):
        nu = restrict_normalize(self.mu, Ball(0, Fraction(1, 5)), self.model)
        self.assertEqual(nu, DiscreteMeasure({0: Fraction(1, 3),
                                              10: Fraction(2, 3)}))

    def test_restrict_normalize_of_dirac_stays_exact(self):
        nu = restrict_normalize(dirac(0), Ball(0, 1), self.model)
        self.assertIsInstance(nu.weight(0), Fraction)

    def test_null_ball(self):
        with self.assertRaisesRegex(MeasureDomainError, "null ball"):
            restrict_normalize(dirac(1), Ball(0, Fraction(1, 5)), self.model)

    def test_residual_reconstructs(self):
        ball = Ball(0, Fraction(1, 5))
        nu = restrict_normalize(self.mu, ball, self.model)
        for alpha in (Fraction(1, 10), Fraction(1, 2), Fraction(7, 10)):
            rest = residual(self.mu, alpha, nu)
            self.assertTrue(rest.is_probability(0))
            back = combine([(alpha, nu), (1 - alpha, rest)])
            self.assertEqual(back, self.mu)

    def test_residual_negative(self):
        nu = restrict_normalize(self.mu, Ball(0, Fraction(1, 5)), self.model)
        with self.assertRaisesRegex(MeasureDomainError, "not a measure"):
            residual(self.mu, Fraction(9, 10), nu)

    def test_residual_alpha_range(self):
        for alpha in (0, 1, 1.5):
            with self.assertRaises(ValueError):
                residual(self.mu, alpha, self.mu)

    def test_float_residual_clips_dust(self):
        mu = DiscreteMeasure({0: 0.5, 1: 0.5})
        nu = DiscreteMeasure({0: 1.0})
        rest = residual(mu, 0.5 + 1e-14, nu)
        self.assertEqual(rest.states(), [1])

    def test_combine_rejects_negative(self):
        with self.assertRaises(ValueError):
            combine([(-1, self.mu)])

    def test_pair(self):
        f = identity_on_norm(self.model)
        expected = 0.25 * 0.2 + 0.5 * 0.1
        self.assertAlmostEqual(pair(f, self.mu), expected, places=15)

    def test_pair_is_bilinear(self):
        gen = torch.Generator().manual_seed(13)
        n = self.model.num_states
        nu = DiscreteMeasure({1: Fraction(2, 3), 7: Fraction(1, 3)})
        for case in product_dict(a=[0.0, 0.5, 3.0], b=[0.25, 2.0]):
            a, b = case["a"], case["b"]
            u, v = random_values(n, gen), random_values(n, gen)
            f = from_values(self.model, u)
            g = from_values(self.model, v)
            mixed = combine([(a, self.mu), (b, nu)])
            self.assertAlmostEqual(pair(f, mixed),
                                   a * pair(f, self.mu) + b * pair(f, nu),
                                   delta=1e-12)
            h = from_values(self.model, a * u + b * v)
            self.assertAlmostEqual(pair(h, self.mu),
                                   a * pair(f, self.mu) + b * pair(g, self.mu),
                                   delta=1e-12)

    def test_max_deviation_exact(self):
        grid = product_dict(a=[0, 1, 5], b=[0, 2, 5])
        for case in grid:
            dev = max_deviation(dirac(case["a"]), dirac(case["b"]))
            self.assertEqual(dev, 0 if case["a"] == case["b"] else 1)
