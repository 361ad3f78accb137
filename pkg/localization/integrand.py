'''
The equivariant integrand attached to a fixed point component X^(d_1) x ... x X^(d_r).

Series variables follow the truncated ring of scalars.series: x_i stands for γ_i and y_i
for θ_i on the i-th symmetric power, both capped at total degree d_i.
'''
from scalars.polynomials import TPoly, ULaurent
from scalars.series import TruncSeries, series_exp, series_pow_int


def stability_weights(p, c):
    '''
    s_i = 𝔱 + l_i - d_i
    '''
    return [TPoly((li - di, 1)) for li, di in zip(p.l, c)]


def kahler_restriction(p, c, w):
    '''
    The equivariant Kähler class on the component: sum_i (s_i x_i + y_i) - s_i w_i u
    '''
    caps = tuple(c)
    result = TruncSeries.zero(caps)
    for i, s in enumerate(stability_weights(p, c)):
        result = result + TruncSeries.x(caps, i) * s + TruncSeries.y(caps, i)
        result = result - ULaurent.monomial(s * w[i], 1)
    return result


def _weight_shift(w, i, j):
    # (w_j - w_i) u, a unit of the coefficient ring for distinct weights
    return ULaurent.monomial(w[j] - w[i], 1)


def inverse_euler_class(p, c, w):
    '''
    Inverse equivariant Euler class of the normal bundle of the component:

        prod_{i != j} ((w_j - w_i)u + x_i)^(ḡ + l_i - d_i - l_j) exp(y_i / ((w_j - w_i)u + x_i))
        x prod_{i < j} ((w_j - w_i)u + x_i - x_j)^(-2ḡ)
    '''
    caps = tuple(c)
    result = TruncSeries.one(caps)
    for i in range(p.r):
        for j in range(p.r):
            if i == j:
                continue
            base = TruncSeries.x(caps, i) + _weight_shift(w, i, j)
            exponent = p.g_bar + p.l[i] - c[i] - p.l[j]
            result = result * series_pow_int(base, exponent)
            result = result * series_exp(TruncSeries.y(caps, i) * series_pow_int(base, -1))
    for i in range(p.r):
        for j in range(i + 1, p.r):
            base = TruncSeries.x(caps, i) - TruncSeries.x(caps, j) + _weight_shift(w, i, j)
            result = result * series_pow_int(base, -2 * p.g_bar)
    return result


def integrand(p, c, w):
    '''
    Kähler class to the power rd times the inverse Euler class, as a truncated series
    '''
    return series_pow_int(kahler_restriction(p, c, w), p.dimension) * inverse_euler_class(p, c, w)
