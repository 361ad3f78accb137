'''
Characteristic classes of the bundle of sections 𝒱 as alternating forms.

Chern character components are passed as a sequence ch[0], ch[1], ..., where ch[i] has
degree 2i. ch[0] is the rank and does not enter the Segre or Chern polynomials.
'''
from fractions import Fraction
from math import factorial

from exterior.alternating import AltForm, exp_even

from .exceptions import GradedDegreeException, IncompletePairingDataException


def _check_graded(ch):
    if not ch:
        raise GradedDegreeException("at least the rank component ch_0 is required")
    q = ch[0].q
    for i, form in enumerate(ch):
        if form.q != q or not form.is_homogeneous_of(2 * i):
            raise GradedDegreeException(f"ch_{i} must be a form of degree {2 * i}")
    return q


def _graded_parts(total, top_degree):
    return [total.homogeneous_part(2 * j) for j in range(top_degree + 1)]


def segre_from_ch(ch, top_degree):
    '''
    Segre classes s_0..s_top from 1 + s_1 + s_2 + ... = exp(sum_i (-1)^i ch_i / i)
    '''
    q = _check_graded(ch)
    exponent = AltForm.zero(q)
    for i in range(1, len(ch)):
        exponent = exponent + ch[i] * Fraction((-1) ** i, i)
    return _graded_parts(exp_even(exponent), top_degree)


def chern_from_ch(ch, top_degree):
    '''
    Chern classes c_0..c_top from exp(sum_i (-1)^(i+1) ch_i / i)
    '''
    q = _check_graded(ch)
    exponent = AltForm.zero(q)
    for i in range(1, len(ch)):
        exponent = exponent + ch[i] * Fraction((-1) ** (i + 1), i)
    return _graded_parts(exp_even(exponent), top_degree)


def chern_segre_product(ch):
    '''
    Total Chern class times total Segre class; this is 1 for any input
    '''
    q = _check_graded(ch)
    c = sum(chern_from_ch(ch, q), AltForm.zero(q))
    s = sum(segre_from_ch(ch, q), AltForm.zero(q))
    return c ^ s


def ch_of_V(data):
    '''
    ch_0 = R and ch_i = sum_{s=0}^{n-i} (-1)^(i+s) / s! 𝔨_(i,s) for i = 1..q.

    Components with i > n have an empty sum and vanish.
    '''
    missing = [key for key in data.required_kappa_keys() if key not in data.kappa_forms]
    if missing:
        raise IncompletePairingDataException(f"missing kappa forms for (i, s) in {missing}")
    ch = [AltForm.scalar(data.q, data.rank)]
    for i in range(1, data.q + 1):
        component = AltForm.zero(data.q)
        for s in range(0, data.n - i + 1):
            component = component + data.kappa_forms[(i, s)] * Fraction((-1) ** (i + s), factorial(s))
        ch.append(component)
    return ch
