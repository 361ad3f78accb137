from fractions import Fraction
from math import comb, factorial
from unittest import mock

from django.test import SimpleTestCase, override_settings

from abelian.problems import CurveQuotProblem
from abelian.volumes import symmetric_power_volume
from scalars.polynomials import TPoly, ULaurent, u_coefficient
from scalars.series import TruncSeries

from .exceptions import (
    DegenerateWeightsException,
    InsufficientWeightCandidatesException,
    UConcentrationException,
)
from .integrand import integrand, inverse_euler_class, kahler_restriction, stability_weights
from .problems import Composition, QuotProblem, WeightVector
from .volumes import (
    compositions,
    default_weight_candidates,
    evaluate_composition,
    localization_sign,
    quot_volume,
    verify_weight_independence,
)

T = TPoly.variable()


def rank_two_length_one(p):
    return T + p.mu + p.g_bar


def rank_two_length_two(p):
    x = T + p.mu + p.g_bar
    return (4 * x * (3 * x - 4) - 6 * p.g_bar) / 24


class CompositionTests(SimpleTestCase):

    def test_order(self):
        self.assertEqual([c.parts for c in compositions(2, 2)], [(2, 0), (1, 1), (0, 2)])
        self.assertEqual([c.parts for c in compositions(0, 3)], [(0, 0, 0)])

    def test_stars_and_bars(self):
        self.assertEqual(len(compositions(3, 3)), 10)
        for d in range(5):
            for r in range(1, 5):
                parts = compositions(d, r)
                self.assertEqual(len(parts), comb(d + r - 1, r - 1))
                self.assertTrue(all(c.total == d and len(c) == r for c in parts))
                self.assertEqual(len(set(parts)), len(parts))


class StabilityWeightTests(SimpleTestCase):

    def test_examples(self):
        p = QuotProblem(g=1, r=2, l=(3, 1), d=1)
        self.assertEqual(stability_weights(p, Composition((1, 0))), [T + 2, T + 1])
        p = QuotProblem(g=1, r=2, l=(2, 1), d=3)
        self.assertEqual(stability_weights(p, Composition((2, 1))), [T, T])
        p = QuotProblem(g=2, r=1, l=(5,), d=3)
        self.assertEqual(stability_weights(p, Composition((3,))), [T + p.deg_E])


class IntegrandTests(SimpleTestCase):

    def test_rank_one_has_no_euler_factors(self):
        p = QuotProblem(g=2, r=1, l=(1,), d=3)
        c = Composition((3,))
        w = WeightVector((Fraction(5, 2),))
        self.assertEqual(inverse_euler_class(p, c, w), TruncSeries.one((3,)))
        self.assertEqual(integrand(p, c, w), kahler_restriction(p, c, w) ** 3)

    def test_point_component_is_a_pure_laurent_scalar(self):
        for g in range(3):
            p = QuotProblem(g=g, r=2, l=(1, -1), d=0)
            series = integrand(p, Composition((0, 0)), WeightVector((0, 1)))
            self.assertEqual(list(series.terms), [(0, 0, 0, 0)])

    def test_first_order_expansion(self):
        p = QuotProblem(g=0, r=2, l=(0, 0), d=1)
        series = integrand(p, Composition((1, 0)), WeightVector((0, 1)))
        self.assertEqual(series.terms, {
            (0, 0, 0, 0): ULaurent.monomial(-T ** 2, 1),
            (1, 0, 0, 0): ULaurent.constant(2 * T ** 2 - 2 * T),
            (0, 1, 0, 0): ULaurent.constant(2 * T - T ** 2),
        })

    def test_kahler_restriction(self):
        p = QuotProblem(g=0, r=2, l=(0, 0), d=1)
        caps = (1, 0)
        expected = TruncSeries.x(caps, 0) * (T - 1) + TruncSeries.y(caps, 0) - ULaurent.monomial(T, 1)
        self.assertEqual(kahler_restriction(p, Composition(caps), WeightVector((0, 1))), expected)


class EvaluateCompositionTests(SimpleTestCase):

    def test_fixture_components(self):
        p = QuotProblem(g=0, r=2, l=(0, 0), d=1)
        w = WeightVector((0, 1))
        self.assertEqual(evaluate_composition(p, Composition((1, 0)), w), 2 * T ** 2 - 2 * T)
        self.assertEqual(evaluate_composition(p, Composition((0, 1)), w), -2 * (T - 1) ** 2)

    def test_rank_one_matches_symmetric_power(self):
        for g in range(4):
            for d in range(5):
                p = QuotProblem(g=g, r=1, l=(2,), d=d)
                expected = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=p.deg_E, d=d)) * factorial(d)
                self.assertEqual(evaluate_composition(p, Composition((d,)), WeightVector((1,))), expected)

    def test_theta_powers_beyond_genus_vanish(self):
        # At g = 0 only pure γ monomials survive the evaluation
        p = QuotProblem(g=0, r=1, l=(0,), d=2)
        self.assertEqual(evaluate_composition(p, Composition((2,)), WeightVector((1,))), (T - 2) ** 2)

    def test_top_coefficients_are_read_at_u_zero(self):
        p = QuotProblem(g=1, r=2, l=(0, 0), d=1)
        with mock.patch('localization.volumes.u_coefficient', wraps=u_coefficient) as extract:
            evaluate_composition(p, Composition((1, 0)), WeightVector((0, 1)))
        self.assertTrue(extract.called)
        self.assertTrue(all(call.args[1] == 0 for call in extract.call_args_list))

    def test_u_concentration_violation(self):
        bad = TruncSeries((1,), {(1, 0): ULaurent((1, 1), 0)})
        p = QuotProblem(g=1, r=1, l=(0,), d=1)
        with mock.patch('localization.volumes.integrand', return_value=bad):
            with self.assertRaises(UConcentrationException):
                evaluate_composition(p, Composition((1,)), WeightVector((1,)))


class LocalizationSignTests(SimpleTestCase):

    def test_parities(self):
        self.assertEqual(localization_sign(QuotProblem(g=0, r=2, l=(0, 0), d=1)), 1)
        self.assertEqual(localization_sign(QuotProblem(g=1, r=2, l=(0, 0), d=1)), -1)
        self.assertEqual(localization_sign(QuotProblem(g=2, r=2, l=(1, 0), d=1)), -1)
        self.assertEqual(localization_sign(QuotProblem(g=3, r=1, l=(4,), d=2)), 1)


class QuotVolumeTests(SimpleTestCase):

    def test_rank_two_length_one(self):
        for g in range(6):
            for l1 in range(-3, 4):
                for l2 in range(-3, 4):
                    p = QuotProblem(g=g, r=2, l=(l1, l2), d=1)
                    self.assertEqual(quot_volume(p), rank_two_length_one(p))

    def test_rank_two_length_two(self):
        for g in range(5):
            for total in (-4, -2, 0, 2, 4):
                for splitting in ((total // 2, total // 2), (total // 2 + 1, total // 2 - 1)):
                    p = QuotProblem(g=g, r=2, l=splitting, d=2)
                    self.assertEqual(quot_volume(p), rank_two_length_two(p))

    def test_length_zero_is_a_point(self):
        for g in range(3):
            for r in range(1, 4):
                self.assertEqual(quot_volume(QuotProblem(g=g, r=r, l=(1,) * r, d=0)), 1)

    def test_rank_one_reduction(self):
        for g in range(5):
            for d in range(6):
                for l in (-1, 0, 3):
                    p = QuotProblem(g=g, r=1, l=(l,), d=d)
                    expected = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=l - d, d=d))
                    self.assertEqual(quot_volume(p), expected)

    def test_degree_bound(self):
        for g in range(3):
            for r in (2, 3):
                for d in (1, 2):
                    p = QuotProblem(g=g, r=r, l=(0,) * r, d=d)
                    self.assertLessEqual(quot_volume(p).degree, r * d)

    def test_splitting_independence(self):
        for g in range(3):
            for d in (1, 2):
                volumes = {quot_volume(QuotProblem(g=g, r=2, l=l, d=d)) for l in ((1, 1), (2, 0), (3, -1), (0, 2))}
                self.assertEqual(len(volumes), 1)
            volumes = {quot_volume(QuotProblem(g=g, r=3, l=l, d=1)) for l in ((1, 0, 0), (0, 0, 1), (2, -1, 0))}
            self.assertEqual(len(volumes), 1)

    def test_positive_for_large_parameter(self):
        for g in range(3):
            for r, d in ((2, 1), (2, 2)):
                p = QuotProblem(g=g, r=r, l=(0,) * r, d=d)
                self.assertGreater(quot_volume(p)(Fraction(50)), 0)

    def test_thread_pool_gives_the_same_result(self):
        p = QuotProblem(g=1, r=3, l=(1, 0, -1), d=2)
        self.assertEqual(quot_volume(p, max_workers=4), quot_volume(p, max_workers=1))

    @override_settings(QUOTVOL={'MAX_WORKERS': 3, 'WEIGHT_SEED': 1, 'RANDOM_WEIGHT_BOUND': 10})
    def test_worker_count_from_settings(self):
        p = QuotProblem(g=2, r=2, l=(1, 1), d=1)
        self.assertEqual(quot_volume(p), T + 2)

    def test_weight_vector_length(self):
        with self.assertRaises(ValueError):
            quot_volume(QuotProblem(g=1, r=2, l=(0, 0), d=1), WeightVector((1, 2, 3)))


class WeightIndependenceTests(SimpleTestCase):

    def test_rank_two_length_one(self):
        p = QuotProblem(g=1, r=2, l=(0, 1), d=1)
        report = verify_weight_independence(p, [(0, 1), (1, 3), (-2, 5)])
        self.assertTrue(report.passed)
        self.assertEqual(report.candidates, 3)

    def test_rank_one(self):
        p = QuotProblem(g=2, r=1, l=(3,), d=3)
        self.assertTrue(verify_weight_independence(p, [(1,), (Fraction(-7, 3),), (11,)]).passed)

    def test_grid(self):
        for r in (2, 3):
            for d in (1, 2, 3):
                for g in range(3):
                    p = QuotProblem(g=g, r=r, l=tuple(range(r)), d=d)
                    report = verify_weight_independence(p)
                    self.assertTrue(report.passed, msg=f"g={g} r={r} d={d}")

    def test_perturbed_sign_is_detected(self):
        p = QuotProblem(g=1, r=2, l=(0, 0), d=1)
        with mock.patch('localization.volumes.localization_sign', side_effect=[1, -1, 1]):
            report = verify_weight_independence(p, [(0, 1), (1, 3), (-2, 5)])
        self.assertFalse(report.passed)

    def test_degenerate_weights(self):
        with self.assertRaises(DegenerateWeightsException):
            WeightVector((1, 1))
        with self.assertRaises(DegenerateWeightsException):
            verify_weight_independence(QuotProblem(g=0, r=2, l=(0, 0), d=1), [(0, 1), (3, 3)])

    def test_needs_two_candidates(self):
        with self.assertRaises(InsufficientWeightCandidatesException):
            verify_weight_independence(QuotProblem(g=0, r=2, l=(0, 0), d=1), [(0, 1)])

    def test_default_candidates(self):
        candidates = default_weight_candidates(3, seed=5, bound=20)
        self.assertEqual(len(candidates), 3)
        self.assertEqual(candidates[0].weights, (1, 2, 3))
        self.assertEqual(candidates[1].weights, (2, 3, 5))
        self.assertEqual(len(set(candidates[2].weights)), 3)
        self.assertEqual(candidates, default_weight_candidates(3, seed=5, bound=20))
