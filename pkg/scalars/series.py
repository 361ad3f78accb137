'''
Truncated multivariate power series in x_1, y_1, ..., x_r, y_r over ULaurent.

A monomial x_1^a_1 y_1^b_1 ... x_r^a_r y_r^b_r is kept only when a_i + b_i <= d_i
for every i. The truncated ring is commutative and every element without constant
term is nilpotent, which is what makes the binomial and exponential series finite.
'''
from fractions import Fraction
from math import factorial

from .exceptions import NonNilpotentExponentialException, NonUnitBaseException
from .polynomials import TPoly, ULaurent
from .utils import generalized_binomial


class TruncSeries:
    '''
    Sparse truncated series, keyed by exponent vectors (a_1, b_1, ..., a_r, b_r).

    Values are immutable: every operation returns a new series. Two series can only
    be combined when they share the same caps.
    '''
    __slots__ = ("r", "caps", "terms")

    def __init__(self, caps, terms=None):
        self.caps = tuple(caps)
        self.r = len(self.caps)
        if self.r < 1:
            raise ValueError("a truncated series needs at least one variable pair")
        if any(d < 0 for d in self.caps):
            raise ValueError("caps must be non-negative")
        stored = {}
        for exponents, value in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != 2 * self.r:
                raise ValueError("exponent vector length does not match the number of pairs")
            value = ULaurent._coerce(value)
            if value.is_zero() or not self.within_caps(exponents):
                continue
            stored[exponents] = value
        self.terms = stored

    # Constructors

    @classmethod
    def zero(cls, caps):
        return cls(caps)

    @classmethod
    def constant(cls, caps, value):
        caps = tuple(caps)
        return cls(caps, {(0,) * (2 * len(caps)): value})

    @classmethod
    def one(cls, caps):
        return cls.constant(caps, 1)

    @classmethod
    def _generator(cls, caps, position):
        caps = tuple(caps)
        exponents = [0] * (2 * len(caps))
        exponents[position] = 1
        return cls(caps, {tuple(exponents): 1})

    @classmethod
    def x(cls, caps, i):
        '''
        The variable x_{i+1} (zero-based index i); it is zero when caps[i] == 0
        '''
        return cls._generator(caps, 2 * i)

    @classmethod
    def y(cls, caps, i):
        return cls._generator(caps, 2 * i + 1)

    # Helpers

    def within_caps(self, exponents):
        for i, d in enumerate(self.caps):
            if exponents[2 * i] + exponents[2 * i + 1] > d:
                return False
        return True

    def pair_degrees(self, exponents):
        return tuple(exponents[2 * i] + exponents[2 * i + 1] for i in range(self.r))

    @property
    def nilpotency_bound(self):
        # Any product of more than sum(caps) elements without constant term vanishes
        return sum(self.caps)

    @property
    def constant_term(self):
        return self.terms.get((0,) * (2 * self.r), ULaurent())

    def without_constant(self):
        origin = (0,) * (2 * self.r)
        return TruncSeries(self.caps, {e: v for e, v in self.terms.items() if e != origin})

    def is_nilpotent(self):
        return self.constant_term.is_zero()

    def is_zero(self):
        return not self.terms

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), ULaurent())

    def homogeneous_part(self, multidegree):
        '''
        Monomials with a_i + b_i == multidegree[i] for every i
        '''
        multidegree = tuple(multidegree)
        return {e: v for e, v in self.terms.items() if self.pair_degrees(e) == multidegree}

    def _check_compatible(self, other):
        if other.caps != self.caps:
            raise ValueError(f"incompatible caps {self.caps} and {other.caps}")

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            self._check_compatible(other)
            return other
        if isinstance(other, (ULaurent, TPoly, int, Fraction)):
            return TruncSeries.constant(self.caps, other)
        return None

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponents, value in other.terms.items():
            if exponents in terms:
                terms[exponents] = terms[exponents] + value
            else:
                terms[exponents] = value
        return TruncSeries(self.caps, terms)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.caps, {e: -v for e, v in self.terms.items()})

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
        if isinstance(other, (ULaurent, TPoly, int, Fraction)):
            return TruncSeries(self.caps, {e: v * other for e, v in self.terms.items()})
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check_compatible(other)
        terms = {}
        for ea, va in self.terms.items():
            for eb, vb in other.terms.items():
                exponents = tuple(a + b for a, b in zip(ea, eb))
                if not self.within_caps(exponents):
                    continue
                product = va * vb
                if exponents in terms:
                    terms[exponents] = terms[exponents] + product
                else:
                    terms[exponents] = product
        return TruncSeries(self.caps, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return TruncSeries(self.caps, {e: v / other for e, v in self.terms.items()})

    def __pow__(self, exponent):
        return series_pow_int(self, exponent)

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, TruncSeries) else other
        if other is None:
            return NotImplemented
        return self.caps == other.caps and self.terms == other.terms

    def __hash__(self):
        return hash((self.caps, frozenset(self.terms.items())))

    def __repr__(self):
        body = ", ".join(f"{e}: {v}" for e, v in sorted(self.terms.items()))
        return f"TruncSeries(caps={self.caps}, {{{body}}})"


def series_pow_int(base, e):
    '''
    Returns base^e in the truncated ring, for any integer e.

    The base is split as c + z with c its constant term and z nilpotent. For e >= 0
    this is sum_k C(e,k) c^(e-k) z^k and no inversion is needed. For e < 0 the
    constant term must be a unit and base^e = c^e sum_k C(e,k) (z/c)^k. In both cases
    the sum stops after nilpotency_bound terms.
    '''
    c = base.constant_term
    z = base.without_constant()
    bound = base.nilpotency_bound
    if e < 0:
        if not c.is_unit():
            raise NonUnitBaseException()
        z = z * c.inverse()
        prefactor = c ** e
    else:
        prefactor = None

    result = TruncSeries.zero(base.caps)
    z_power = TruncSeries.one(base.caps)
    k = 0
    while k <= bound and not z_power.is_zero():
        if e >= 0 and k > e:
            break
        weight = generalized_binomial(e, k)
        if prefactor is None:
            result = result + z_power * (c ** (e - k)) * weight
        else:
            result = result + z_power * weight
        k += 1
        z_power = z_power * z
    if prefactor is not None:
        result = result * prefactor
    return result


def series_exp(arg):
    '''
    Returns exp(arg) = sum_k arg^k / k! for an argument without constant term
    '''
    if not arg.is_nilpotent():
        raise NonNilpotentExponentialException()
    result = TruncSeries.one(arg.caps)
    power = TruncSeries.one(arg.caps)
    for k in range(1, arg.nilpotency_bound + 1):
        power = power * arg
        if power.is_zero():
            break
        result = result + power / factorial(k)
    return result
