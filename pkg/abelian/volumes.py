'''
Closed volume formulas for Quot spaces with rank one kernel.

All volumes are normalized, i.e. computed for the Kähler form ω_t / 4π², and returned
as polynomials in 𝔱.
'''
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from exterior.alternating import AltForm, evaluate_top, standard_symplectic, symplectic_form, theta_form
from scalars.polynomials import TPoly
from scalars.utils import binomial, falling_factorial, to_rational

from .characteristic import ch_of_V, segre_from_ch
from .problems import AcyclicData, CurveQuotProblem

logger = logging.getLogger(__name__)


def poincare_number(g, a, b):
    '''
    <γ^a θ^b, [X^(a+b)]> = g!/(g-b)! for b <= g, and 0 otherwise
    '''
    return falling_factorial(g, b)


def symmetric_power_volume(p):
    '''
    v(𝔱) = sum_{j=0}^{min(d,g)} C(g,j)/(d-j)! (deg_E + 𝔱)^(d-j)
    '''
    base = TPoly((p.deg_E, 1))
    volume = TPoly()
    for j in range(min(p.d, p.g) + 1):
        volume = volume + base ** (p.d - j) * (binomial(p.g, j) / factorial(p.d - j))
    return volume


def poincare_expansion_volume(p):
    '''
    Expands (θ + (deg_E + 𝔱)γ)^d / d! and evaluates every γ^(d-j) θ^j with poincare_number
    '''
    base = TPoly((p.deg_E, 1))
    volume = TPoly()
    for j in range(p.d + 1):
        volume = volume + base ** (p.d - j) * (binomial(p.d, j) * poincare_number(p.g, p.d - j, j))
    return volume / factorial(p.d)


@dataclass(frozen=True)
class MantonNasirComparison:
    unnormalized: Fraction
    manton_nasir: Fraction
    expected_ratio: Fraction

    @property
    def ratio(self):
        if self.manton_nasir == 0:
            return None
        return self.unnormalized / self.manton_nasir

    @property
    def holds(self):
        return self.unnormalized == self.expected_ratio * self.manton_nasir


def manton_nasir_check(g, d, vol_X, pi_stand_in):
    '''
    Compares (4π²)^d v(𝔱) at deg_E = -d, 𝔱 = vol_X / 4π with the Manton-Nasir sum
    sum_i (4π)^i C(g,i)/(d-i)! (vol_X - 4πd)^(d-i), both with π replaced by a rational probe.

    The two agree up to the factor π^d.
    '''
    vol_X = to_rational(vol_X)
    pi = to_rational(pi_stand_in)
    if pi == 0:
        raise ValueError("the π stand-in must be nonzero")
    ttilde = vol_X / (4 * pi)
    volume = symmetric_power_volume(CurveQuotProblem(g=g, deg_E=-d, d=d))
    unnormalized = (4 * pi ** 2) ** d * volume(ttilde)
    manton_nasir = sum(
        ((4 * pi) ** i * binomial(g, i) / factorial(d - i) * (vol_X - 4 * pi * d) ** (d - i)
         for i in range(min(d, g) + 1)),
        Fraction(0))
    return MantonNasirComparison(unnormalized, manton_nasir, pi ** d)


def acyclic_volume(data):
    '''
    v(𝔱) = (1/N!) sum_{k=0}^{min(q,N)} C(N,k) (deg_E + 𝔱)^(N-k) <θ^k ∧ s_{q-k}(𝒱)>

    Only k <= q contributes since the pushforward of γ^(N-k) is the Segre class s_{q-k}.
    '''
    dimension = data.dimension
    theta = theta_form(data.q, data.h)
    segre = segre_from_ch(ch_of_V(data), data.q)
    base = TPoly((data.deg_E, 1))

    volume = TPoly()
    theta_power = AltForm.one(data.q)
    for k in range(min(data.q, dimension) + 1):
        if k:
            theta_power = theta_power ^ theta
        pairing = evaluate_top(theta_power ^ segre[data.q - k])
        if pairing:
            volume = volume + base ** (dimension - k) * (binomial(dimension, k) * pairing)
    return volume / factorial(dimension)


def acyclicity_warnings(g, r0, deg_E0, m):
    '''
    Warnings for curve data outside the acyclic range deg ℰ_0 > r_0 m + 2 r_0 (g - 1)
    '''
    warnings = []
    if not deg_E0 > r0 * m + 2 * r0 * (g - 1):
        message = (
            f"deg_E0 = {deg_E0} is outside the acyclic range (> {r0 * m + 2 * r0 * (g - 1)}); "
            "formula value, the pair may not be acyclic")
        warnings.append(message)
    return warnings


def curve_acyclic_data(g, r0, deg_E0, m):
    '''
    Acyclic pairing data for a curve of genus g with ℰ_0 of rank r0 and degree deg_E0,
    and ℒ of degree m.
    '''
    for message in acyclicity_warnings(g, r0, deg_E0, m):
        logger.warning(message)
    kappa = {(1, 0): symplectic_form(g) * r0} if g else {}
    return AcyclicData(
        n=1,
        q=g,
        deg_E=m,
        pairings=(deg_E0 + r0 * (1 - g), r0 * m),
        h=standard_symplectic(g),
        kappa_forms=kappa,
    )
