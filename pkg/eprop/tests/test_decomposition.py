import unittest
from fractions import Fraction

import torch

from eprop.decomposition import (
    CLOSE, NOT_APPLICABLE, NOT_CLOSE_ENOUGH, PASS, DecompositionConfig,
    PreconditionError, SearchHorizonError, check_contradiction_bound,
    choose_k, continuity_scan, decompose, decompose_along, default_config,
    lemma_candidates, oscillation_bound, select_alpha, split_radius,
    telescoped, telescoping_ok, verify_telescoping)
from eprop.diagnostics import default_probe_plan
from eprop.measure import DiscreteMeasure, support
from eprop.operator import constant, identity_on_norm
from eprop.space import Ball, build_doeblin, build_doeblin3, build_example1

from eprop.tests.utils_for_tests import product_dict, random_rational_model


def doeblin_setup(**overrides):
    model = build_doeblin3()
    f = identity_on_norm(model)
    return model, f, default_config(model, f, **overrides)


class TestParameters(unittest.TestCase):
    def test_choose_k(self):
        self.assertEqual(choose_k(Fraction(1, 2), 1, 1), 2)
        self.assertEqual(choose_k(Fraction(1, 2), 1, 0.05), 6)
        self.assertEqual(choose_k(0.5, 0.01, 1), 1)
        for alpha in (0, 1, -0.5):
            with self.assertRaises(ValueError):
                choose_k(alpha, 1, 0.1)
        with self.assertRaises(ValueError):
            choose_k(0.5, 1, 0)

    def test_choose_k_meets_accuracy(self):
        for case in product_dict(alpha=[0.1, 0.3, 0.7],
                                 sup=[0.5, 1.0, 3.0], eps=[0.01, 0.2]):
            k = choose_k(case["alpha"], case["sup"], case["eps"])
            tail = (1 - case["alpha"]) ** k
            self.assertLess(2 * tail * case["sup"], case["eps"])
            if k > 1:
                self.assertGreaterEqual(
                    2 * tail / (1 - case["alpha"]) * case["sup"],
                    case["eps"])

    def test_oscillation_bound_value(self):
        model = build_doeblin3()
        cfg = DecompositionConfig(0, 0, Fraction(1, 4), Fraction(1, 2), 2)
        self.assertAlmostEqual(
            oscillation_bound(cfg, constant(model, 1.0), 0.1), 0.575,
            places=12)

    def test_oscillation_bound_monotone(self):
        model = build_doeblin3()
        f = constant(model, 1.0)
        for alpha in (0.2, 0.5, 0.8):
            previous = None
            for k in range(1, 10):
                cfg = DecompositionConfig(0, 0, 1, alpha, k)
                low = oscillation_bound(cfg, f, 0.05)
                high = oscillation_bound(cfg, f, 0.5)
                self.assertLessEqual(low, high)
                if previous is not None:
                    self.assertLess(low, previous)
                previous = low

    def test_invalid_config(self):
        with self.assertRaises(ValueError):
            DecompositionConfig(0, 0, 1, 1, 3)
        with self.assertRaises(ValueError):
            DecompositionConfig(0, 0, 0, 0.5, 3)
        with self.assertRaises(ValueError):
            DecompositionConfig(0, 0, 1, 0.5, 0)
        with self.assertRaises(ValueError):
            DecompositionConfig(0, 0, 1, 0.5, 3, n_search=20000)

    def test_select_alpha(self):
        model = build_doeblin3()
        self.assertEqual(select_alpha(model, 0, Fraction(1, 4)),
                         Fraction(1, 6))
        self.assertAlmostEqual(
            select_alpha(model, 0, Fraction(1, 4), exact=False), 1.0 / 6,
            places=12)
        self.assertEqual(select_alpha(build_example1(10), 0,
                                      Fraction(1, 20)), Fraction(1, 2))

    def test_default_configs(self):
        _, _, cfg = doeblin_setup()
        self.assertEqual((cfg.x0, cfg.z), (2, 0))
        self.assertEqual(cfg.r, Fraction(1, 4))
        self.assertEqual(cfg.alpha, Fraction(1, 6))
        self.assertEqual(cfg.k, 21)
        model = build_example1(100)
        cfg = default_config(model, identity_on_norm(model))
        self.assertEqual(cfg.x0, 1)
        self.assertEqual(cfg.r, Fraction(1, 200))
        self.assertEqual(cfg.alpha, Fraction(1, 2))
        self.assertEqual(cfg.k, 6)

    def test_split_radius(self):
        model = build_example1(10)
        mu = DiscreteMeasure({0: Fraction(1, 4), 10: Fraction(1, 4),
                              5: Fraction(1, 2)})
        r = Fraction(3, 10)
        self.assertEqual(split_radius(model, mu, 0, r, Fraction(1, 3)),
                         Fraction(3, 20))
        self.assertEqual(split_radius(model, mu, 0, r, Fraction(9, 10)),
                         Fraction(1, 4))
        self.assertIsNone(split_radius(model, mu, 0, Fraction(1, 20),
                                       Fraction(1, 3)))


class TestDecompose(unittest.TestCase):
    def test_example1_waits_for_absorption(self):
        model = build_example1(100)
        cfg = default_config(model, identity_on_norm(model), x0=10)
        tree = decompose(model, cfg)
        self.assertEqual(tree.steps, [10, 1, 1, 1, 1, 1])
        self.assertTrue(tree.exact)
        for lvl in tree.levels:
            self.assertEqual(support(lvl.nu), {0})

    def test_doeblin_first_level(self):
        model, _, cfg = doeblin_setup(x0=1, alpha=Fraction(1, 6))
        tree = decompose(model, cfg)
        self.assertEqual(tree.steps[0], 2)
        self.assertEqual(len(tree), cfg.k)

    def test_pieces_live_in_their_balls(self):
        model, _, cfg = doeblin_setup()
        tree = decompose(model, cfg)
        for lvl in tree.levels:
            self.assertLess(lvl.radius, cfg.r)
            members = set(Ball(cfg.z, lvl.radius).members(model))
            self.assertTrue(support(lvl.nu) <= members)
            self.assertGreater(lvl.mass, cfg.alpha)
            self.assertEqual(lvl.nu.total_mass(), 1)
            self.assertEqual(lvl.mu.total_mass(), 1)

    def test_alpha_above_target_mass(self):
        model = build_doeblin3()
        cfg = DecompositionConfig(2, 0, Fraction(1, 4), Fraction(1, 2), 3)
        with self.assertRaisesRegex(PreconditionError, "Choose α"):
            decompose(model, cfg)

    def test_search_horizon(self):
        model = build_example1(100)
        cfg = DecompositionConfig(100, 0, Fraction(1, 200), Fraction(1, 2),
                                  2, n_search=50)
        with self.assertRaises(PreconditionError):
            decompose(model, cfg)
        with self.assertRaises(SearchHorizonError) as ctx:
            decompose(model, cfg, validate=False)
        self.assertEqual(ctx.exception.level, 1)


class TestTelescoping(unittest.TestCase):
    def test_exact_on_builtins(self):
        model, _, cfg = doeblin_setup()
        tree = decompose(model, cfg)
        self.assertEqual(verify_telescoping(model, cfg, tree), 0)
        self.assertEqual(verify_telescoping(model, cfg, tree, 5), 0)
        self.assertTrue(telescoping_ok(tree, 0))
        model = build_example1(100)
        cfg = default_config(model, identity_on_norm(model), x0=10)
        tree = decompose(model, cfg)
        self.assertEqual(verify_telescoping(model, cfg, tree), 0)

    def test_coefficients_sum_to_one(self):
        model, _, cfg = doeblin_setup()
        tree = decompose(model, cfg)
        self.assertEqual(telescoped(model, tree).total_mass(), 1)

    def test_exact_on_random_kernels(self):
        gen = torch.Generator().manual_seed(23)
        for _ in range(50):
            model = random_rational_model(4, gen)
            f = identity_on_norm(model)
            cfg = default_config(model, f, k=4)
            tree = decompose(model, cfg)
            self.assertTrue(tree.exact)
            self.assertEqual(verify_telescoping(model, cfg, tree), 0)

    def test_float_mode(self):
        model, _, cfg = doeblin_setup(alpha=1.0 / 6, k=8)
        tree = decompose(model, cfg)
        self.assertFalse(tree.exact)
        deviation = verify_telescoping(model, cfg, tree, 3)
        self.assertLessEqual(deviation, 1e-10)
        self.assertTrue(telescoping_ok(tree, deviation))
        self.assertFalse(telescoping_ok(tree, 1e-6))

    def test_negative_extra_steps(self):
        model, _, cfg = doeblin_setup(k=2)
        tree = decompose(model, cfg)
        with self.assertRaises(ValueError):
            verify_telescoping(model, cfg, tree, -1)


class TestContinuity(unittest.TestCase):
    def test_start_point_is_reproduced(self):
        model, _, cfg = doeblin_setup(k=5)
        tree = decompose(model, cfg)
        levels, complete = decompose_along(model, tree, cfg.x0)
        self.assertTrue(complete)
        report = continuity_scan(model, cfg, [cfg.x0], tree)
        self.assertEqual(len(report.rows), 5)
        self.assertEqual(report.column("flat_nu"), [0.0] * 5)
        self.assertEqual(report.column("flat_mu"), [0.0] * 5)
        self.assertEqual(report.column("status"), [CLOSE] * 5)

    def test_far_probe_is_not_close(self):
        model = build_example1(100)
        cfg = default_config(model, identity_on_norm(model), x0=10)
        tree = decompose(model, cfg)
        report = continuity_scan(model, cfg, [20, 10], tree)
        self.assertEqual(report.rows[0][0], 20)
        self.assertEqual(report.rows[0][5], NOT_CLOSE_ENOUGH)
        self.assertEqual(report.rows[0][2], 1)
        self.assertEqual(report.column("status")[1:], [CLOSE] * cfg.k)


class TestContradiction(unittest.TestCase):
    def test_doeblin_passes(self):
        model, f, cfg = doeblin_setup()
        plan = default_probe_plan(model, target=cfg.x0, horizon=200)
        report = check_contradiction_bound(model, cfg, f, plan)
        self.assertEqual(report.status, PASS)
        for row in report.rows:
            self.assertIn(row[5], (PASS, NOT_CLOSE_ENOUGH))
        self.assertGreaterEqual(report.window[0], 100)
        self.assertTrue(report.lemma.found)

    def test_constant_observable_passes(self):
        model, _, cfg = doeblin_setup(k=4)
        f = constant(model, 1.0)
        plan = default_probe_plan(model, target=cfg.x0, horizon=60)
        report = check_contradiction_bound(model, cfg, f, plan)
        self.assertEqual(report.status, PASS)

    def test_example1_not_applicable(self):
        model = build_example1(100)
        f = identity_on_norm(model)
        cfg = default_config(model, f, x0=10)
        plan = default_probe_plan(model, horizon=200)
        report = check_contradiction_bound(model, cfg, f, plan)
        self.assertEqual(report.status, NOT_APPLICABLE)
        self.assertEqual(report.rows, [])
        self.assertEqual(report.to_json()["status"], NOT_APPLICABLE)

    def test_falls_back_to_candidate_balls(self):
        # points 0, 1/10, 3/10 on a line; state 2 is transient
        half = Fraction(1, 2)
        matrix = [[half, half, 0], [half, half, 0], [half, 0, half]]
        metric = [[0, Fraction(1, 10), Fraction(3, 10)],
                  [Fraction(1, 10), 0, Fraction(1, 5)],
                  [Fraction(3, 10), Fraction(1, 5), 0]]
        model = build_doeblin(matrix, metric, tag="transient")
        model.invariant_measure = DiscreteMeasure({0: half, 1: half})
        f = identity_on_norm(model)
        cfg = default_config(model, f, z=0, r=Fraction(1, 5), x0=2)
        self.assertEqual(cfg.alpha, half)
        candidates = lemma_candidates(model, cfg)
        self.assertEqual(candidates[0], Ball(0, Fraction(2, 5)))
        self.assertIn(Ball(0, Fraction(1, 5)), candidates)
        self.assertNotIn(Ball(0, Fraction(1, 20)), candidates)
        plan = default_probe_plan(model, target=cfg.x0, horizon=60)
        report = check_contradiction_bound(model, cfg, f, plan)
        self.assertEqual(report.lemma.ball, Ball(0, Fraction(1, 5)))
        self.assertIn("not inside supp", report.lemma.notes[0])
        self.assertEqual(report.status, PASS)

    def test_empty_window(self):
        model, f, cfg = doeblin_setup(k=3)
        plan = default_probe_plan(model, target=cfg.x0, horizon=4,
                                  tail_start=1)
        report = check_contradiction_bound(model, cfg, f, plan)
        self.assertEqual(report.status, NOT_APPLICABLE)
        self.assertIn("empty", report.notes[-1])
