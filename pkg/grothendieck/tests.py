from math import factorial

from django.test import SimpleTestCase

from abelian.problems import CurveQuotProblem
from abelian.volumes import symmetric_power_volume
from localization.problems import QuotProblem
from localization.volumes import quot_volume
from scalars.polynomials import TPoly

from .embedding import embedding_params, embedding_warnings, grothendieck_degree
from .exceptions import DegreeIntegralityException


class GrothendieckDegreeTests(SimpleTestCase):

    def test_rank_two_length_one(self):
        for g in range(4):
            for l1, l2 in ((0, 0), (1, 0), (2, -3)):
                p = QuotProblem(g=g, r=2, l=(l1, l2), d=1)
                for n in range(g + 2, g + 7):
                    self.assertEqual(grothendieck_degree(p, n), 2 * n + l1 + l2)

    def test_rank_two_length_two(self):
        for g in range(4):
            for l in ((0, 0), (2, 0), (-1, -1)):
                p = QuotProblem(g=g, r=2, l=l, d=2)
                volume = quot_volume(p)
                for n in range(g + 2, g + 7):
                    m = 2 * n + sum(l)
                    degree = grothendieck_degree(p, n, volume=volume)
                    self.assertEqual(degree, m * (3 * m - 8) - 6 * p.g_bar)

    def test_point(self):
        for g in range(3):
            self.assertEqual(grothendieck_degree(QuotProblem(g=g, r=2, l=(0, 1), d=0), 3), 1)

    def test_degrees_are_non_negative_integers(self):
        for g in range(4):
            for r in (1, 2):
                for d in range(3):
                    p = QuotProblem(g=g, r=r, l=(1,) * r, d=d)
                    for n in range(g + d + 2, g + d + 5):
                        degree = grothendieck_degree(p, n)
                        self.assertIsInstance(degree, int)
                        self.assertGreaterEqual(degree, 0)

    def test_rank_one_is_the_symmetric_power_degree(self):
        for g in range(4):
            for d in range(4):
                p = QuotProblem(g=g, r=1, l=(3,), d=d)
                volume = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=p.deg_E, d=d))
                for n in (g + d + 2, g + d + 5):
                    self.assertEqual(grothendieck_degree(p, n), volume(n - p.g_bar) * factorial(d))

    def test_integrality_is_checked(self):
        p = QuotProblem(g=1, r=2, l=(0, 0), d=1)
        with self.assertRaises(DegreeIntegralityException):
            grothendieck_degree(p, 3, volume=TPoly.variable() / 5)

    def test_twist_must_be_positive(self):
        with self.assertRaises(ValueError):
            grothendieck_degree(QuotProblem(g=1, r=2, l=(0, 0), d=1), 0)


class EmbeddingParamsTests(SimpleTestCase):

    def test_plane_dimension(self):
        p = QuotProblem(g=1, r=2, l=(0, 0), d=1)
        self.assertEqual(embedding_params(p, 3).s, 5)
        self.assertEqual(embedding_params(p, 3).sections_dimension, 6)
        self.assertEqual(embedding_params(p, 3).ambient_dimension, 5)

    def test_twist_at_g_minus_one(self):
        p = QuotProblem(g=1, r=2, l=(3, 1), d=2)
        self.assertEqual(embedding_params(p, 0).s, p.total_degree - p.d)

    def test_rank_one_is_riemann_roch(self):
        for g in range(4):
            p = QuotProblem(g=g, r=1, l=(4,), d=1)
            for n in range(1, 6):
                self.assertEqual(embedding_params(p, n).s, p.deg_E + n - g + 1)

    def test_no_ambient_for_negative_plane_dimension(self):
        p = QuotProblem(g=3, r=2, l=(0, 0), d=2)
        self.assertIsNone(embedding_params(p, 1).ambient_dimension)

    def test_warnings(self):
        p = QuotProblem(g=3, r=2, l=(0, 0), d=2)
        with self.assertLogs('grothendieck.embedding', level='WARNING'):
            warnings = embedding_warnings(p, 1)
        self.assertEqual(len(warnings), 2)
        self.assertEqual(embedding_warnings(p, 8), [])
