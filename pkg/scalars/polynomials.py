'''
Univariate polynomials in the stability parameter 𝔱 and Laurent polynomials in the
equivariant parameter u.

Both types are immutable and use exact Fraction coefficients. Arithmetic with plain
ints and Fractions is supported on both sides of every operator.
'''
from fractions import Fraction

from .exceptions import NonUnitBaseException
from .utils import rational_string

# Degree reported for the zero polynomial
ZERO_DEGREE = -1

TTILDE = "𝔱"


class TPoly:
    '''
    A polynomial in 𝔱 with Fraction coefficients, stored lowest degree first.

    Trailing zero coefficients are always trimmed so that two equal polynomials
    have equal coefficient tuples.
    '''
    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        terms = [Fraction(c) for c in coefficients]
        while terms and terms[-1] == 0:
            terms.pop()
        self.coefficients = tuple(terms)

    @classmethod
    def constant(cls, value):
        return cls((value,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        return None

    @property
    def degree(self):
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    def coefficient(self, k):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def is_zero(self):
        return not self.coefficients

    def is_constant(self):
        return len(self.coefficients) <= 1

    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __bool__(self):
        return bool(self.coefficients)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self.coefficients), len(other.coefficients))
        return TPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coefficients)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return TPoly()
            return TPoly(c * other for c in self.coefficients)
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return TPoly()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return TPoly(product)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return TPoly(c / other for c in self.coefficients)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("TPoly powers must be non-negative integers")
        result = TPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, value):
        '''
        Evaluates at a rational value, or composes when value is itself a TPoly
        '''
        result = Fraction(0) if not isinstance(value, TPoly) else TPoly()
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(("TPoly", self.coefficients))

    def as_strings(self):
        '''
        Ascending coefficient list as "num/den" strings (index k is the 𝔱^k coefficient)
        '''
        return [rational_string(c) for c in self.coefficients]

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = TTILDE if k == 1 else f"{TTILDE}^{k}"
                if magnitude == 1:
                    body = power
                elif magnitude.denominator == 1:
                    body = f"{magnitude}{power}"
                else:
                    body = f"({magnitude}){power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"TPoly({[str(c) for c in self.coefficients]!r})"


def _as_tpoly(value):
    if isinstance(value, TPoly):
        return value
    return TPoly.constant(value)


class ULaurent:
    '''
    A Laurent polynomial in u whose coefficients are TPoly values.

    coefficients[k] multiplies u^(lowest_exponent + k). Zero coefficients at both ends
    are trimmed, so the exponent window is always as small as possible. The zero
    element has no coefficients and lowest_exponent 0.
    '''
    __slots__ = ("lowest_exponent", "coefficients")

    def __init__(self, coefficients=(), lowest_exponent=0):
        terms = [_as_tpoly(c) for c in coefficients]
        start = 0
        while start < len(terms) and terms[start].is_zero():
            start += 1
        terms = terms[start:]
        while terms and terms[-1].is_zero():
            terms.pop()
        self.coefficients = tuple(terms)
        self.lowest_exponent = lowest_exponent + start if terms else 0

    @classmethod
    def monomial(cls, coefficient, exponent=0):
        return cls((coefficient,), exponent)

    @classmethod
    def constant(cls, value):
        return cls.monomial(value, 0)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, ULaurent):
            return other
        if isinstance(other, (TPoly, int, Fraction)):
            return cls.constant(other)
        return None

    @property
    def highest_exponent(self):
        return self.lowest_exponent + len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __bool__(self):
        return bool(self.coefficients)

    def coefficient(self, k):
        index = k - self.lowest_exponent
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return TPoly()

    def support(self):
        '''
        Exponents of u carrying a nonzero coefficient
        '''
        return [self.lowest_exponent + i for i, c in enumerate(self.coefficients) if not c.is_zero()]

    def is_monomial(self):
        return len(self.coefficients) == 1

    def is_unit(self):
        '''
        A unit is c·u^k with c a nonzero constant, the only invertible elements here
        '''
        return self.is_monomial() and self.coefficients[0].is_constant()

    def inverse(self):
        if not self.is_unit():
            raise NonUnitBaseException()
        c = self.coefficients[0].coefficient(0)
        return ULaurent.monomial(1 / c, -self.lowest_exponent)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coefficients:
            return other
        if not other.coefficients:
            return self
        low = min(self.lowest_exponent, other.lowest_exponent)
        high = max(self.highest_exponent, other.highest_exponent)
        return ULaurent(
            (self.coefficient(k) + other.coefficient(k) for k in range(low, high + 1)), low)

    __radd__ = __add__

    def __neg__(self):
        return ULaurent((-c for c in self.coefficients), self.lowest_exponent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (TPoly, int, Fraction)):
            return ULaurent((c * other for c in self.coefficients), self.lowest_exponent)
        if not isinstance(other, ULaurent):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return ULaurent()
        product = [TPoly()] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] = product[i + j] + a * b
        return ULaurent(product, self.lowest_exponent + other.lowest_exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return ULaurent((c / other for c in self.coefficients), self.lowest_exponent)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ULaurent.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.lowest_exponent, self.coefficients) == (other.lowest_exponent, other.coefficients)

    def __hash__(self):
        return hash(("ULaurent", self.lowest_exponent, self.coefficients))

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            k = self.lowest_exponent + i
            parts.append(f"({c})" if k == 0 else f"({c})u^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ULaurent({self})"


def u_coefficient(s, k):
    '''
    Returns the TPoly coefficient of u^k in s (the zero polynomial outside the window)
    '''
    return s.coefficient(k)
