from fractions import Fraction
from math import factorial


def to_rational(value):
    '''
    Converts an int, a Fraction or a "num/den" string into an exact Fraction.

    Floats are refused because they would silently bring rounding into the core.
    '''
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted, use 'num/den' strings")
    return Fraction(value)


def rational_string(value):
    '''
    Returns the "num/den" rendering used in every output document (integers keep /1)
    '''
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def falling_factorial(g, k):
    '''
    Returns g(g-1)...(g-k+1) as a Fraction.

    This is 1 for k = 0 and 0 as soon as k > g (the product then passes through 0).
    '''
    if k < 0:
        raise ValueError("k must be non-negative")
    result = 1
    for i in range(k):
        result *= g - i
    return Fraction(result)


def generalized_binomial(e, k):
    '''
    C(e, k) = e(e-1)...(e-k+1)/k! for any integer e, including negative ones
    '''
    if k < 0:
        return Fraction(0)
    return falling_factorial(e, k) / factorial(k)


def binomial(n, k):
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(factorial(n), factorial(k) * factorial(n - k))
