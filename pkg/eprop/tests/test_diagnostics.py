import unittest

import torch

from eprop.diagnostics import (
    FAILS, HOLDS, INCONCLUSIVE, DiagnosticReport, ProbePlan, Verdict,
    absorption_time, cesaro_profile, default_candidate_balls,
    default_probe_plan, eproperty_profile, find_lemma_ball, gap_verdict,
    ladder_towards, liminf_ball_mass, settling_times, stability_scan,
    stability_trace)
from eprop.measure import DiscreteMeasure, dirac
from eprop.operator import constant, from_values, identity_on_norm, \
    min1_2norm
from eprop.space import (
    Ball, MetricModel, build_doeblin3, build_example1, build_example2,
    build_halfmap, example2_state)

from eprop.tests.utils_for_tests import (
    product_dict, random_values, trajectory_cesaro, trajectory_gap)

PRIMES = [2, 3, 5, 7, 11, 13]


class TestVerdict(unittest.TestCase):
    def test_gap_verdicts(self):
        self.assertEqual(gap_verdict([1.0, 1.0, 1.0]), Verdict(FAILS, 1.0))
        self.assertEqual(gap_verdict([0.5, 1e-9, 0.0]), Verdict(HOLDS))
        self.assertEqual(gap_verdict([0.8, 0.4, 0.1]),
                         Verdict(INCONCLUSIVE))
        self.assertEqual(gap_verdict([]), Verdict(INCONCLUSIVE))
        self.assertEqual(str(Verdict(FAILS, 1.0)), "FAILS(1)")

    def test_gaps_decaying_with_distance(self):
        distances = [1.0, 0.8, 0.6, 0.5]
        self.assertEqual(gap_verdict([1.0, 0.8, 0.6, 0.5], distances),
                         Verdict(INCONCLUSIVE))
        self.assertEqual(gap_verdict([1.0, 1.0, 1.0, 0.95], distances),
                         Verdict(FAILS, 0.95))
        self.assertEqual(gap_verdict([0.7], [0.5]), Verdict(FAILS, 0.7))

    def test_report_rows_must_match_columns(self):
        with self.assertRaises(ValueError):
            DiagnosticReport("x", ["a", "b"], [(1,)])

    def test_csv_rendering(self):
        report = DiagnosticReport("x", ["probe_id", "distance", "gap"],
                                  [(3, 1.0 / 3, 0.1)])
        self.assertEqual(report.to_csv_rows(),
                         [["probe_id", "distance", "gap"],
                          ["3", "0.333333333333", "0.1"]])


class TestProbePlan(unittest.TestCase):
    def test_invalid_windows(self):
        with self.assertRaises(ValueError):
            ProbePlan(0, [1], 0)
        with self.assertRaises(ValueError):
            ProbePlan(0, [1], 10, tail_start=11)
        with self.assertRaises(ValueError):
            ProbePlan(0, [], 10)

    def test_probe_outside_model(self):
        model = build_example1(10)
        with self.assertRaises(ValueError):
            eproperty_profile(model, identity_on_norm(model),
                              ProbePlan(0, [5, 11], 20))

    def test_ladder_must_approach_target(self):
        model = build_example1(10)
        with self.assertRaises(ValueError):
            ProbePlan(0, [6, 5], 20).validate(model)

    def test_default_ladders(self):
        plan = default_probe_plan(build_example1(100), horizon=200)
        self.assertEqual(plan.probes, list(range(5, 101)))
        self.assertEqual(plan.tail_start, 100)
        model = build_example2(PRIMES)
        plan = default_probe_plan(model, horizon=200, cesaro=True)
        self.assertEqual(plan.probes,
                         [example2_state(model, p, 1) for p in PRIMES])
        self.assertEqual(plan.windows, [(p, p) for p in PRIMES])
        plan = default_probe_plan(build_doeblin3())
        self.assertEqual(plan.probes, [2, 1])


class TestEpropertyProfile(unittest.TestCase):
    def test_example1_fails_with_unit_gaps(self):
        model = build_example1(100)
        plan = default_probe_plan(model, horizon=200, tail_start=1)
        report = eproperty_profile(model, identity_on_norm(model), plan)
        self.assertEqual(len(report.rows), 96)
        for gap in report.gaps:
            self.assertAlmostEqual(gap, 1.0, delta=1e-12)
        self.assertEqual(report.verdict, Verdict(FAILS, 1.0))

    def test_identity_kernel_is_not_a_failure(self):
        points = build_example1(100)
        model = MetricModel(points.states, points.metric,
                            [dirac(s) for s in range(points.num_states)],
                            "identity")
        plan = ProbePlan(0, ladder_towards(model, 0), 50, 1)
        report = eproperty_profile(model, identity_on_norm(model), plan)
        self.assertAlmostEqual(report.gaps[0], 1.0, delta=1e-12)
        self.assertAlmostEqual(report.gaps[-1], 0.01, delta=1e-12)
        self.assertEqual(report.verdict, Verdict(INCONCLUSIVE))

    def test_matches_trajectory_oracle(self):
        cases = product_dict(tail_start=[1, 5, 30], horizon=[30, 60])
        model = build_example2([2, 3, 5, 7])
        f = min1_2norm(model)
        for case in cases:
            plan = ProbePlan(0, [example2_state(model, p, 1)
                                 for p in (2, 3, 5, 7)],
                             case["horizon"], case["tail_start"])
            report = eproperty_profile(model, f, plan)
            for x, gap in zip(plan.probes, report.gaps):
                self.assertEqual(gap, trajectory_gap(
                    model, f, x, 0, case["tail_start"], case["horizon"]))

    def test_halfmap_modulus(self):
        model = build_halfmap(20)
        f = identity_on_norm(model)
        plan = default_probe_plan(model, horizon=50, tail_start=1)
        report = eproperty_profile(model, f, plan)
        for x, d, gap in report.rows:
            self.assertLessEqual(gap, f.lip_const * d + 1e-15)

    def test_constant_observable_holds(self):
        for model in (build_example1(20), build_doeblin3()):
            plan = default_probe_plan(model, horizon=40, tail_start=1)
            report = eproperty_profile(model, constant(model, 0.7), plan)
            self.assertLessEqual(max(report.gaps), 1e-15)
            self.assertEqual(report.verdict, Verdict(HOLDS))

    def test_gaps_grow_with_horizon(self):
        model = build_doeblin3()
        f = identity_on_norm(model)
        small = eproperty_profile(model, f, ProbePlan(0, [2, 1], 10, 1))
        large = eproperty_profile(model, f, ProbePlan(0, [2, 1], 40, 1))
        for a, b in zip(small.gaps, large.gaps):
            self.assertLessEqual(a, b)

    def test_doeblin_gaps_decay(self):
        model = build_doeblin3()
        gen = torch.Generator().manual_seed(17)
        for _ in range(100):
            f = from_values(model, random_values(3, gen))
            n0 = 10
            report = eproperty_profile(model, f, ProbePlan(0, [2, 1], 60, n0))
            for gap in report.gaps:
                self.assertLessEqual(gap, 2 * 0.7 ** n0 * f.sup_bound)
            self.assertLessEqual(max(report.gaps), 2 * f.sup_bound)

    def test_doeblin_holds(self):
        model = build_doeblin3()
        report = eproperty_profile(model, identity_on_norm(model),
                                   default_probe_plan(model, horizon=200))
        self.assertEqual(report.verdict, Verdict(HOLDS))


class TestCesaroProfile(unittest.TestCase):
    def test_example2_fails_above_one_half(self):
        model = build_example2(PRIMES)
        f = min1_2norm(model)
        plan = default_probe_plan(model, horizon=200, cesaro=True)
        report = cesaro_profile(model, f, plan)
        for p, x, gap in zip(PRIMES, plan.probes, report.gaps):
            self.assertGreaterEqual(gap, 0.5)
            self.assertAlmostEqual(gap, trajectory_cesaro(model, f, x, p),
                                   delta=1e-12)
        self.assertAlmostEqual(report.gaps[2], 0.76, delta=1e-12)
        self.assertTrue(report.verdict.fails)
        self.assertGreaterEqual(report.verdict.value, 0.5)

    def test_example1_holds_at_long_horizon(self):
        model = build_example1(100)
        plan = default_probe_plan(model, horizon=10000)
        report = cesaro_profile(model, identity_on_norm(model), plan,
                                tol=0.01)
        for gap in report.gaps:
            self.assertLessEqual(gap, 0.01)
        self.assertEqual(report.verdict, Verdict(HOLDS))

    def test_constant_observable(self):
        model = build_example2([2, 3])
        plan = default_probe_plan(model, horizon=20, cesaro=True)
        report = cesaro_profile(model, constant(model), plan)
        self.assertEqual(report.gaps, [0.0, 0.0])


class TestStability(unittest.TestCase):
    def test_example1_absorbs(self):
        model = build_example1(60)
        trace = stability_trace(model, dirac(50), 70)
        for n, d in trace:
            if n >= 50:
                self.assertEqual(d, 0.0)
            else:
                self.assertGreater(d, 0.0)
        self.assertEqual(absorption_time(trace), 50)

    def test_invariant_measure_is_fixed(self):
        for model in (build_doeblin3(), build_example1(10)):
            trace = stability_trace(model, model.invariant_measure, 30)
            for _, d in trace:
                self.assertLessEqual(d, 1e-9)

    def test_doeblin_contraction(self):
        model = build_doeblin3()
        for start in range(3):
            for n, d in stability_trace(model, dirac(start), 30):
                self.assertLessEqual(d, 2 * 0.7 ** n + 1e-12)

    def test_missing_invariant_measure(self):
        model = build_doeblin3()
        model.invariant_measure = None
        with self.assertRaises(ValueError):
            stability_trace(model, dirac(0), 3)

    def test_scan(self):
        report = stability_scan(build_example1(10), 15)
        self.assertEqual(report.column("absorption_time"),
                         list(range(11)))
        self.assertEqual(report.verdict, Verdict(HOLDS))


class TestBallMass(unittest.TestCase):
    def test_absorbed_model(self):
        model = build_example1(20)
        ball = Ball(0, 0.01)
        self.assertEqual(liminf_ball_mass(model, dirac(20), ball, (20, 40)),
                         1.0)
        self.assertEqual(liminf_ball_mass(model, dirac(20), ball, (0, 40)),
                         0.0)

    def test_ball_outside_support(self):
        model = build_example1(20)
        ball = Ball(1, 0.1)
        mu = DiscreteMeasure({5: 0.5, 10: 0.5})
        self.assertEqual(liminf_ball_mass(model, mu, ball, (30, 60)), 0.0)

    def test_doeblin(self):
        model = build_doeblin3()
        low = liminf_ball_mass(model, dirac(2), Ball(0, 0.25), (20, 60))
        self.assertGreaterEqual(low, model.invariant_measure.weight(0) - 0.01)

    def test_window_validated(self):
        model = build_doeblin3()
        with self.assertRaises(ValueError):
            liminf_ball_mass(model, dirac(0), Ball(0, 0.25), (5, 2))


class TestLemmaBall(unittest.TestCase):
    def test_doeblin_whole_space(self):
        model = build_doeblin3()
        f = identity_on_norm(model)
        whole = Ball(0, 2)
        search = find_lemma_ball(model, f, 0.1, [whole], n_max=60)
        self.assertTrue(search.found)
        self.assertEqual(search.ball, whole)
        # oscillation of U^n f on the whole space is at most 0.7^n osc(f)
        bound = next(n for n in range(1, 61)
                     if 2 * 0.7 ** n * f.oscillation() <= 0.1)
        self.assertLessEqual(search.start, bound)
        self.assertLessEqual(search.oscillation, 0.1)

    def test_large_eps_settles_at_once(self):
        model = build_doeblin3()
        f = identity_on_norm(model)
        search = find_lemma_ball(model, f, 2 * f.sup_bound, [Ball(1, 2)],
                                 n_max=10)
        self.assertEqual(search.start, 1)

    def test_example1_has_no_lemma_ball(self):
        model = build_example1(100)
        f = identity_on_norm(model)
        search = find_lemma_ball(model, f, 0.1, n_max=200)
        self.assertFalse(search.found)
        self.assertTrue(len(search.notes) > 0)

    def test_ball_outside_support_is_skipped(self):
        model = build_example2([2, 3])
        f = min1_2norm(model)
        search = find_lemma_ball(model, f, 0.1, [Ball(0, 1)], n_max=10)
        self.assertFalse(search.found)
        self.assertIn("not inside supp", search.notes[0])

    def test_default_candidates(self):
        balls = default_candidate_balls(build_doeblin3())
        self.assertEqual([b.radius for b in balls if b.center == 0],
                         [0.25, 0.75, 2])

    def test_settling_times(self):
        model = build_example1(10)
        f = identity_on_norm(model)
        times = settling_times(model, f, 0.1, 20)
        # f(T^n x) = 0 from the absorption time on
        self.assertEqual(times[:4], [0, 1, 2, 3])
        self.assertEqual(times[10], 10)
