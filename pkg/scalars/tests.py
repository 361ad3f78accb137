import random
from fractions import Fraction

from django.test import SimpleTestCase

from .exceptions import NonNilpotentExponentialException, NonUnitBaseException
from .polynomials import ZERO_DEGREE, TPoly, ULaurent, u_coefficient
from .series import TruncSeries, series_exp, series_pow_int
from .utils import binomial, falling_factorial, generalized_binomial, rational_string, to_rational

T = TPoly.variable()


def u_power(k, coefficient=1):
    return ULaurent.monomial(coefficient, k)


def random_series(rng, caps, with_constant=True):
    '''
    Builds a series with small random TPoly-valued Laurent coefficients
    '''
    terms = {}
    for _ in range(6):
        exponents = []
        for d in caps:
            a = rng.randint(0, d)
            b = rng.randint(0, d - a)
            exponents.extend((a, b))
        if not with_constant and sum(exponents) == 0:
            continue
        coefficient = ULaurent(
            [TPoly((rng.randint(-3, 3), rng.randint(-2, 2))) for _ in range(2)],
            rng.randint(-1, 1))
        terms[tuple(exponents)] = coefficient
    return TruncSeries(caps, terms)


class RationalHelpersTests(SimpleTestCase):

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(3, 2), 6)
        self.assertEqual(falling_factorial(5, 0), 1)
        self.assertEqual(falling_factorial(1, 2), 0)
        self.assertEqual(falling_factorial(4, 4), 24)

    def test_generalized_binomial_for_negative_exponents(self):
        for k in range(6):
            self.assertEqual(generalized_binomial(-1, k), (-1) ** k)
        self.assertEqual(generalized_binomial(-2, 3), -4)
        self.assertEqual(generalized_binomial(5, 2), binomial(5, 2))
        self.assertEqual(generalized_binomial(2, 3), 0)

    def test_rational_parsing_and_rendering(self):
        self.assertEqual(to_rational("3/6"), Fraction(1, 2))
        self.assertEqual(to_rational(4), Fraction(4))
        self.assertEqual(rational_string(Fraction(-2, 4)), "-1/2")
        self.assertEqual(rational_string(3), "3/1")
        with self.assertRaises(TypeError):
            to_rational(0.5)


class TPolyTests(SimpleTestCase):

    def test_trims_trailing_zeros_and_reports_degree(self):
        self.assertEqual(TPoly((1, 2, 0, 0)).coefficients, (1, 2))
        self.assertEqual(TPoly((1, 2)).degree, 1)
        self.assertEqual(TPoly().degree, ZERO_DEGREE)
        self.assertEqual(TPoly((0, 0)).degree, ZERO_DEGREE)

    def test_arithmetic(self):
        p = T + 2
        q = T - 1
        self.assertEqual(p * q, TPoly((-2, 1, 1)))
        self.assertEqual(p - p, 0)
        self.assertEqual(3 - T, TPoly((3, -1)))
        self.assertEqual((T + 1) ** 3, TPoly((1, 3, 3, 1)))
        self.assertEqual(p / 2, TPoly((1, Fraction(1, 2))))

    def test_evaluation_and_composition(self):
        p = TPoly((1, 2, 3))
        self.assertEqual(p(Fraction(1, 2)), Fraction(11, 4))
        self.assertEqual(p(T + 1), TPoly((6, 8, 3)))

    def test_plain_rendering(self):
        self.assertEqual(str(T + 2), "𝔱 + 2")
        self.assertEqual(str(TPoly((0, 0, Fraction(1, 2)))), "(1/2)𝔱^2")
        self.assertEqual(str(TPoly((-1, -1))), "-𝔱 - 1")
        self.assertEqual(str(TPoly((Fraction(-1, 3), 0, 2))), "2𝔱^2 - 1/3")
        self.assertEqual(str(TPoly()), "0")


class ULaurentTests(SimpleTestCase):

    def test_u_coefficient(self):
        s = ULaurent((3, T), -1)
        self.assertEqual(u_coefficient(s, 0), T)
        self.assertEqual(u_coefficient(s, -1), 3)
        self.assertEqual(u_coefficient(ULaurent(), 5), TPoly())
        self.assertEqual(u_coefficient(s, 7), TPoly())

    def test_window_is_trimmed(self):
        s = ULaurent((0, 0, 5, 0), -3)
        self.assertEqual(s.lowest_exponent, -1)
        self.assertEqual(s.support(), [-1])
        self.assertTrue(s.is_unit())

    def test_inverse_of_unit(self):
        s = u_power(2, Fraction(3, 2))
        self.assertEqual(s * s.inverse(), 1)
        self.assertEqual(s ** -2, u_power(-4, Fraction(4, 9)))

    def test_non_units_are_rejected(self):
        with self.assertRaises(NonUnitBaseException):
            ULaurent.monomial(T, 1).inverse()
        with self.assertRaises(NonUnitBaseException):
            ULaurent((1, 1)).inverse()
        with self.assertRaises(NonUnitBaseException):
            ULaurent().inverse()


class TruncSeriesTests(SimpleTestCase):

    def test_zero_cap_variables_vanish(self):
        caps = (0, 2)
        self.assertTrue(TruncSeries.x(caps, 0).is_zero())
        self.assertTrue(TruncSeries.y(caps, 0).is_zero())
        self.assertFalse(TruncSeries.y(caps, 1).is_zero())

    def test_products_respect_caps(self):
        caps = (1, 1)
        x1 = TruncSeries.x(caps, 0)
        y1 = TruncSeries.y(caps, 0)
        x2 = TruncSeries.x(caps, 1)
        self.assertTrue((x1 * y1).is_zero())
        self.assertEqual((x1 * x2).terms, {(1, 0, 1, 0): ULaurent.constant(1)})

    def test_ring_axioms_on_random_instances(self):
        rng = random.Random(7)
        for caps in ((2,), (1, 1), (2, 1)):
            a, b, c = (random_series(rng, caps) for _ in range(3))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_homogeneous_part(self):
        caps = (1, 1)
        s = 1 + TruncSeries.x(caps, 0) + TruncSeries.y(caps, 1) + TruncSeries.x(caps, 0) * TruncSeries.x(caps, 1)
        self.assertEqual(list(s.homogeneous_part((1, 1))), [(1, 0, 1, 0)])
        self.assertEqual(len(s.homogeneous_part((1, 0))), 1)


class SeriesPowIntTests(SimpleTestCase):

    def test_scalar_negative_power(self):
        base = TruncSeries.constant((1,), u_power(1, 3))
        self.assertEqual(series_pow_int(base, -2), TruncSeries.constant((1,), u_power(-2, Fraction(1, 9))))

    def test_geometric_series_truncation(self):
        caps = (1,)
        base = TruncSeries.constant(caps, u_power(1)) + TruncSeries.x(caps, 0)
        expected = TruncSeries(caps, {(0, 0): u_power(-1), (1, 0): u_power(-2, -1)})
        self.assertEqual(series_pow_int(base, -1), expected)

    def test_positive_power(self):
        caps = (2,)
        base = TruncSeries.constant(caps, u_power(1)) + TruncSeries.x(caps, 0)
        expected = TruncSeries(caps, {
            (0, 0): u_power(3),
            (1, 0): u_power(2, 3),
            (2, 0): u_power(1, 3),
        })
        self.assertEqual(series_pow_int(base, 3), expected)

    def test_matches_repeated_multiplication(self):
        rng = random.Random(11)
        for caps in ((2,), (1, 1), (1, 2)):
            base = random_series(rng, caps)
            product = TruncSeries.one(caps)
            for e in range(6):
                self.assertEqual(series_pow_int(base, e), product)
                product = product * base

    def test_positive_power_of_non_unit_constant(self):
        caps = (1, 1)
        base = TruncSeries.constant(caps, ULaurent.monomial(T + 1, 1)) + TruncSeries.y(caps, 1)
        self.assertEqual(series_pow_int(base, 4), base * base * base * base)

    def test_negative_powers_invert_positive_ones(self):
        rng = random.Random(3)
        for caps in ((2,), (1, 1)):
            for _ in range(3):
                unit = u_power(rng.randint(-2, 2), Fraction(rng.randint(1, 5), rng.randint(1, 4)))
                base = random_series(rng, caps, with_constant=False) + unit
                for e in range(1, 5):
                    self.assertEqual(series_pow_int(base, e) * series_pow_int(base, -e), TruncSeries.one(caps))

    def test_non_unit_base_for_negative_power(self):
        caps = (1,)
        with self.assertRaises(NonUnitBaseException):
            series_pow_int(TruncSeries.constant(caps, ULaurent.monomial(T, 1)) + TruncSeries.x(caps, 0), -1)
        with self.assertRaises(NonUnitBaseException):
            series_pow_int(TruncSeries.x(caps, 0), -2)


class SeriesExpTests(SimpleTestCase):

    def test_exp_of_zero(self):
        self.assertEqual(series_exp(TruncSeries.zero((2,))), TruncSeries.one((2,)))

    def test_exp_truncates_at_cap(self):
        caps = (1,)
        y1 = TruncSeries.y(caps, 0)
        self.assertEqual(series_exp(y1), 1 + y1)

    def test_exp_with_laurent_coefficient(self):
        caps = (2,)
        arg = TruncSeries.y(caps, 0) * u_power(-1)
        expected = TruncSeries(caps, {
            (0, 0): 1,
            (0, 1): u_power(-1),
            (0, 2): u_power(-2, Fraction(1, 2)),
        })
        self.assertEqual(series_exp(arg), expected)

    def test_exp_is_a_homomorphism(self):
        rng = random.Random(5)
        for caps in ((2,), (1, 1), (2, 1)):
            a = random_series(rng, caps, with_constant=False)
            b = random_series(rng, caps, with_constant=False)
            self.assertEqual(series_exp(a) * series_exp(b), series_exp(a + b))

    def test_exp_rejects_constant_term(self):
        with self.assertRaises(NonNilpotentExponentialException):
            series_exp(TruncSeries.one((1,)))
