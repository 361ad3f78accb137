import random
from fractions import Fraction
from itertools import combinations
from math import factorial

import sympy
from django.test import SimpleTestCase

from scalars.polynomials import TPoly

from .alternating import (
    AltForm,
    evaluate_top,
    exp_even,
    standard_symplectic,
    symplectic_form,
    theta_form,
    wedge,
)
from .exceptions import (
    NonAntisymmetricPairingException,
    OddFormExponentialException,
    RankMismatchException,
)


def random_form(rng, q, degree):
    subsets = list(combinations(range(1, 2 * q + 1), degree))
    chosen = rng.sample(subsets, min(len(subsets), 3))
    return AltForm(q, {s: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for s in chosen})


def random_antisymmetric(rng, q):
    size = 2 * q
    h = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            h[i][j] = rng.randint(-3, 3)
            h[j][i] = -h[i][j]
    return h


def pfaffian_by_minors(h):
    '''
    Expansion along the first row: pf(h) = sum_j (-1)^(j+1) h_0j pf(h without rows and columns 0, j)
    '''
    size = len(h)
    if size == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(1, size):
        if h[0][j]:
            rest = [k for k in range(1, size) if k != j]
            minor = [[h[a][b] for b in rest] for a in rest]
            total += (-1) ** (j + 1) * Fraction(h[0][j]) * pfaffian_by_minors(minor)
    return total


class WedgeTests(SimpleTestCase):

    def test_basis_products(self):
        l1 = AltForm.basis(1, 1)
        l2 = AltForm.basis(1, 2)
        self.assertEqual(l1 ^ l2, AltForm.basis(1, 1, 2))
        self.assertTrue((l1 ^ l1).is_zero())
        self.assertEqual(l2 ^ l1, -AltForm.basis(1, 1, 2))

    def test_unsorted_keys_pick_up_the_permutation_sign(self):
        self.assertEqual(AltForm(2, {(3, 1, 2): 1}), AltForm.basis(2, 1, 2, 3))
        self.assertEqual(AltForm(2, {(2, 1): 5}), AltForm(2, {(1, 2): -5}))
        self.assertTrue(AltForm(2, {(1, 1): 3}).is_zero())

    def test_degree_beyond_top_vanishes(self):
        top = AltForm.basis(1, 1, 2)
        self.assertTrue(wedge(top, AltForm.basis(1, 1)).is_zero())

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatchException):
            wedge(AltForm.basis(1, 1), AltForm.basis(2, 1))

    def test_graded_commutativity_and_associativity(self):
        rng = random.Random(17)
        for q in range(1, 5):
            for k1, k2, k3 in ((1, 1, 2), (2, 1, 1), (1, 2, 3), (2, 2, 1)):
                if k1 + k2 + k3 > 2 * q:
                    continue
                a, b, c = random_form(rng, q, k1), random_form(rng, q, k2), random_form(rng, q, k3)
                self.assertEqual(a ^ b, (b ^ a) * (-1) ** (k1 * k2))
                self.assertEqual((a ^ b) ^ c, a ^ (b ^ c))

    def test_tpoly_coefficients_collapse_when_constant(self):
        t = TPoly.variable()
        form = AltForm.basis(1, 1, 2) * t
        self.assertEqual(evaluate_top(form), t)
        self.assertEqual(evaluate_top(form - form + AltForm.basis(1, 1, 2) * TPoly.constant(3)), Fraction(3))


class ExponentialTests(SimpleTestCase):

    def test_exp_of_zero(self):
        self.assertEqual(exp_even(AltForm.zero(2)), AltForm.one(2))

    def test_exp_q1(self):
        l12 = AltForm.basis(1, 1, 2)
        self.assertEqual(exp_even(l12), 1 + l12)

    def test_exp_q2(self):
        l12 = AltForm.basis(2, 1, 2)
        l34 = AltForm.basis(2, 3, 4)
        self.assertEqual(exp_even(l12 + l34), 1 + l12 + l34 + AltForm.basis(2, 1, 2, 3, 4))

    def test_exp_is_a_homomorphism(self):
        rng = random.Random(23)
        for q in (1, 2, 3):
            a = random_form(rng, q, 2) + random_form(rng, q, 4 if q >= 2 else 2)
            b = random_form(rng, q, 2)
            self.assertEqual(exp_even(a) ^ exp_even(b), exp_even(a + b))

    def test_odd_component_is_rejected(self):
        with self.assertRaises(OddFormExponentialException):
            exp_even(AltForm.basis(2, 1) + AltForm.basis(2, 1, 2))


class EvaluationTests(SimpleTestCase):

    def test_top_form(self):
        for q in range(1, 4):
            self.assertEqual(evaluate_top(AltForm.basis(q, *range(1, 2 * q + 1))), 1)

    def test_square_of_symplectic_form(self):
        sigma = AltForm.basis(2, 1, 2) + AltForm.basis(2, 3, 4)
        self.assertEqual(evaluate_top(sigma ^ sigma), 2)

    def test_lower_degree_evaluates_to_zero(self):
        self.assertEqual(evaluate_top(AltForm.basis(2, 1, 2)), 0)
        self.assertEqual(evaluate_top(AltForm.one(2)), 0)

    def test_q_zero_top_is_the_scalar_part(self):
        self.assertEqual(evaluate_top(AltForm.one(0)), 1)


class ThetaFormTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(theta_form(1, [[0, 1], [-1, 0]]), AltForm.basis(1, 1, 2))
        self.assertEqual(symplectic_form(2), AltForm.basis(2, 1, 2) + AltForm.basis(2, 3, 4))
        self.assertTrue(theta_form(2, [[0] * 4 for _ in range(4)]).is_zero())

    def test_non_antisymmetric_pairing(self):
        with self.assertRaises(NonAntisymmetricPairingException):
            theta_form(1, [[0, 1], [1, 0]])
        with self.assertRaises(NonAntisymmetricPairingException):
            theta_form(1, [[1, 1], [-1, 0]])

    def test_shape_must_match_rank(self):
        with self.assertRaises(RankMismatchException):
            theta_form(2, [[0, 1], [-1, 0]])

    def test_top_power_is_the_pfaffian(self):
        rng = random.Random(29)
        for q in (1, 2, 3):
            for _ in range(4):
                h = random_antisymmetric(rng, q)
                theta = theta_form(q, h)
                power = AltForm.one(q)
                for _ in range(q):
                    power = power ^ theta
                pfaffian = evaluate_top(power) / factorial(q)
                self.assertEqual(pfaffian, pfaffian_by_minors(h))
                self.assertEqual(pfaffian ** 2, Fraction(int(sympy.Matrix(h).det())))

    def test_pfaffian_sign_follows_the_ordering(self):
        # Swapping the two basis vectors of a symplectic pair flips the sign
        h = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
        power = theta_form(2, h) ^ theta_form(2, h)
        self.assertEqual(evaluate_top(power) / 2, -1)
        self.assertEqual(pfaffian_by_minors(h), -1)

    def test_principal_polarization(self):
        for q in (1, 2, 3):
            theta = theta_form(q, standard_symplectic(q))
            power = AltForm.one(q)
            for _ in range(q):
                power = power ^ theta
            self.assertEqual(evaluate_top(power) / factorial(q), 1)
