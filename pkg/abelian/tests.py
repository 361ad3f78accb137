import random
from fractions import Fraction
from itertools import combinations
from math import factorial

from django.test import SimpleTestCase

from exterior.alternating import AltForm, standard_symplectic, symplectic_form, wedge
from scalars.polynomials import TPoly
from scalars.utils import falling_factorial

from .characteristic import ch_of_V, chern_from_ch, chern_segre_product, segre_from_ch
from .exceptions import (
    EmptyProjectiveBundleException,
    GradedDegreeException,
    IncompletePairingDataException,
    NonIntegralRankException,
)
from .problems import AcyclicData, CurveQuotProblem
from .volumes import (
    acyclic_volume,
    acyclicity_warnings,
    curve_acyclic_data,
    manton_nasir_check,
    poincare_expansion_volume,
    poincare_number,
    symmetric_power_volume,
)

T = TPoly.variable()


def random_homogeneous(rng, q, degree):
    subsets = list(combinations(range(1, 2 * q + 1), degree))
    chosen = rng.sample(subsets, min(len(subsets), 2))
    return AltForm(q, {s: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for s in chosen})


class PoincareNumberTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(poincare_number(1, 0, 1), 1)
        self.assertEqual(poincare_number(3, 4, 0), 1)
        self.assertEqual(poincare_number(1, 0, 2), 0)

    def test_matches_falling_factorials(self):
        for g in range(6):
            for b in range(g + 1):
                self.assertEqual(poincare_number(g, 2, b), factorial(g) // factorial(g - b))


class SymmetricPowerVolumeTests(SimpleTestCase):

    def test_genus_zero(self):
        e = Fraction(3)
        self.assertEqual(symmetric_power_volume(CurveQuotProblem(g=0, deg_E=e, d=2)), (T + e) ** 2 / 2)

    def test_sum_starts_at_zero(self):
        # The j = 0 term is what keeps the 𝔱 dependence; starting at j = 1 would give 1
        for e in (-2, 0, Fraction(5, 3)):
            volume = symmetric_power_volume(CurveQuotProblem(g=1, deg_E=e, d=1))
            self.assertEqual(volume, T + e + 1)
            self.assertNotEqual(volume, 1)

    def test_point(self):
        for g in range(4):
            self.assertEqual(symmetric_power_volume(CurveQuotProblem(g=g, deg_E=7, d=0)), 1)

    def test_degree_and_leading_coefficient(self):
        for g in range(4):
            for d in range(6):
                volume = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=-1, d=d))
                self.assertEqual(volume.degree, d)
                self.assertEqual(volume.leading_coefficient(), Fraction(1, falling_factorial(d, d)))

    def test_agrees_with_poincare_expansion(self):
        for g in range(5):
            for d in range(7):
                for e in (-2, 0, Fraction(3, 2)):
                    p = CurveQuotProblem(g=g, deg_E=e, d=d)
                    self.assertEqual(symmetric_power_volume(p), poincare_expansion_volume(p))

    def test_positive_beyond_the_kahler_threshold(self):
        for g in range(4):
            for d in range(1, 5):
                e = Fraction(-1)
                volume = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=e, d=d))
                for offset in (Fraction(1, 7), Fraction(1), Fraction(9, 2)):
                    self.assertGreater(volume(-e + d + offset), 0)

    def test_negative_length_is_rejected(self):
        with self.assertRaises(ValueError):
            CurveQuotProblem(g=1, deg_E=0, d=-1)


class MantonNasirTests(SimpleTestCase):

    def test_examples(self):
        comparison = manton_nasir_check(0, 1, Fraction(5), Fraction(1))
        self.assertEqual(comparison.ratio, 1)
        comparison = manton_nasir_check(1, 1, Fraction(3), Fraction(2))
        self.assertEqual(comparison.ratio, 2)
        comparison = manton_nasir_check(2, 0, Fraction(3), Fraction(2))
        self.assertEqual((comparison.unnormalized, comparison.manton_nasir), (1, 1))

    def test_ratio_is_pi_to_the_d(self):
        probes = [Fraction(3), Fraction(22, 7), Fraction(-5, 2), Fraction(355, 113), Fraction(1, 9)]
        for g in range(4):
            for d in range(5):
                for pi in probes:
                    comparison = manton_nasir_check(g, d, Fraction(17, 3), pi)
                    self.assertTrue(comparison.holds)
                    self.assertEqual(comparison.expected_ratio, pi ** d)

    def test_zero_probe_is_rejected(self):
        with self.assertRaises(ValueError):
            manton_nasir_check(1, 1, 3, 0)


class CharacteristicClassTests(SimpleTestCase):

    def test_zero_chern_character(self):
        segre = segre_from_ch([AltForm.scalar(2, 3), AltForm.zero(2), AltForm.zero(2)], 2)
        self.assertEqual(segre, [AltForm.one(2), AltForm.zero(2), AltForm.zero(2)])

    def test_first_component_only(self):
        a = AltForm.basis(2, 1, 2) + AltForm.basis(2, 3, 4) * 2
        segre = segre_from_ch([AltForm.scalar(2, 1), a], 2)
        self.assertEqual(segre[1], -a)
        self.assertEqual(segre[2], wedge(a, a) / 2)
        chern = chern_from_ch([AltForm.scalar(2, 1), a], 2)
        self.assertEqual(chern[1], a)

    def test_chern_times_segre_is_one(self):
        rng = random.Random(31)
        for _ in range(100):
            q = rng.randint(1, 3)
            ch = [AltForm.scalar(q, rng.randint(1, 4))]
            ch.extend(random_homogeneous(rng, q, 2 * i) for i in range(1, q + 1))
            self.assertEqual(chern_segre_product(ch), AltForm.one(q))

    def test_graded_degree_error(self):
        with self.assertRaises(GradedDegreeException):
            segre_from_ch([AltForm.one(2), AltForm.basis(2, 1, 2, 3, 4)], 2)


class AcyclicDataTests(SimpleTestCase):

    def zero_kappa(self, n, q):
        return {(i, s): AltForm.zero(q) for i in range(1, q + 1) for s in range(n - i + 1)}

    def test_zero_kappa_forms_give_zero_chern_character(self):
        data = AcyclicData(n=2, q=2, deg_E=1, pairings=(4, 1, 2), h=standard_symplectic(2),
                           kappa_forms=self.zero_kappa(2, 2))
        ch = ch_of_V(data)
        self.assertEqual(ch[0], AltForm.scalar(2, data.rank))
        self.assertTrue(all(component.is_zero() for component in ch[1:]))

    def test_rank_follows_the_pairings(self):
        data = AcyclicData(n=2, q=0, deg_E=0, pairings=(5, 2, 4), h=())
        self.assertEqual(data.rank, 5)
        self.assertEqual(data.dimension, 4)

    def test_curve_case(self):
        data = curve_acyclic_data(2, 1, 5, 1)
        self.assertEqual(ch_of_V(data)[1], -symplectic_form(2))
        self.assertTrue(ch_of_V(data)[2].is_zero())

    def test_curve_riemann_roch(self):
        for g in range(3):
            for d in range(max(g, 2 * g - 1), 2 * g + 4):
                data = curve_acyclic_data(g, 1, 0, -d)
                self.assertEqual(data.rank, d + 1 - g)
                self.assertEqual(data.dimension, d)

    def test_curve_examples(self):
        self.assertEqual(curve_acyclic_data(0, 1, 2, 0).kappa_forms, {})
        self.assertEqual(curve_acyclic_data(0, 1, 2, 0).q, 0)
        self.assertEqual(curve_acyclic_data(1, 2, 5, 0).kappa_forms, {(1, 0): AltForm.basis(1, 1, 2) * 2})

    def test_missing_kappa_form(self):
        data = AcyclicData(n=1, q=1, deg_E=0, pairings=(3, 0), h=standard_symplectic(1))
        with self.assertRaises(IncompletePairingDataException):
            ch_of_V(data)

    def test_wrong_number_of_pairings(self):
        with self.assertRaises(IncompletePairingDataException):
            AcyclicData(n=2, q=0, deg_E=0, pairings=(1, 0), h=())

    def test_kappa_form_of_wrong_degree(self):
        with self.assertRaises(GradedDegreeException):
            AcyclicData(n=1, q=1, deg_E=0, pairings=(3, 0), h=standard_symplectic(1),
                        kappa_forms={(1, 0): AltForm.basis(1, 1)})

    def test_non_integral_rank(self):
        data = AcyclicData(n=2, q=0, deg_E=0, pairings=(1, 0, 1), h=())
        with self.assertRaises(NonIntegralRankException):
            data.rank


class AcyclicVolumeTests(SimpleTestCase):

    def test_curve_genus_one_length_one(self):
        data = curve_acyclic_data(1, 1, 0, -1)
        self.assertEqual(acyclic_volume(data), T)

    def test_simply_connected_base(self):
        data = AcyclicData(n=1, q=0, deg_E=2, pairings=(3, 0), h=())
        self.assertEqual(acyclic_volume(data), (T + 2) ** 2 / 2)

    def test_zero_kappa_forms(self):
        data = AcyclicData(n=1, q=1, deg_E=-1, pairings=(2, 0), h=standard_symplectic(1),
                           kappa_forms={(1, 0): AltForm.zero(1)})
        self.assertEqual(acyclic_volume(data), T - 1)

    def test_empty_projective_bundle(self):
        data = AcyclicData(n=1, q=0, deg_E=0, pairings=(2, 2), h=())
        with self.assertRaises(EmptyProjectiveBundleException):
            acyclic_volume(data)

    def test_agrees_with_symmetric_power_volume(self):
        for g in range(3):
            for d in range(max(0, 2 * g - 1), 2 * g + 4):
                for deg_E0 in (0, 3):
                    m = deg_E0 - d
                    expected = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=m, d=d))
                    self.assertEqual(acyclic_volume(curve_acyclic_data(g, 1, deg_E0, m)), expected)

    def test_warning_outside_the_acyclic_range(self):
        with self.assertLogs('abelian.volumes', level='WARNING'):
            curve_acyclic_data(1, 1, 0, 0)
        warnings = acyclicity_warnings(1, 1, 0, 0)
        self.assertEqual(len(warnings), 1)
        self.assertEqual(acyclicity_warnings(1, 1, 1, 0), [])
