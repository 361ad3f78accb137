'''
Alternating forms on the lattice H^1(X, Z) of rank 2q.

A form is a finite sum of coefficients times basis products λ_I = λ_i1 ∧ ... ∧ λ_ik,
keyed by strictly increasing index tuples I ⊆ {1, ..., 2q}. Forms may mix degrees,
which is what the exponential and the total Segre/Chern classes produce.
'''
from fractions import Fraction
from math import factorial

from scalars.exceptions import NonNilpotentExponentialException
from scalars.polynomials import TPoly
from scalars.utils import to_rational

from .exceptions import (
    NonAntisymmetricPairingException,
    OddFormExponentialException,
    RankMismatchException,
)


def _normalize_coefficient(value):
    # TPoly coefficients only survive while they actually depend on 𝔱
    if isinstance(value, TPoly):
        return value.coefficient(0) if value.is_constant() else value
    return to_rational(value)


def _is_zero(value):
    return value.is_zero() if isinstance(value, TPoly) else value == 0


def _sort_with_sign(indices):
    '''
    Sorts an index tuple and returns (sign, sorted tuple); sign is 0 on a repeated index
    '''
    indices = list(indices)
    if len(set(indices)) != len(indices):
        return 0, None
    sign = 1
    # Insertion sort, counting transpositions
    for i in range(1, len(indices)):
        j = i
        while j > 0 and indices[j - 1] > indices[j]:
            indices[j - 1], indices[j] = indices[j], indices[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(indices)


class AltForm:
    '''
    An element of the exterior algebra over Z^{2q} with rational (or TPoly) coefficients.

    Keys passed to the constructor need not be sorted: they are put in increasing order
    with the matching permutation sign, and keys with a repeated index are dropped.
    '''
    __slots__ = ("q", "terms")

    def __init__(self, q, terms=None):
        if q < 0:
            raise ValueError("q must be non-negative")
        self.q = q
        stored = {}
        for indices, value in (terms or {}).items():
            indices = tuple(indices)
            if any(i < 1 or i > 2 * q for i in indices):
                raise ValueError(f"index out of range 1..{2 * q}: {indices}")
            sign, key = _sort_with_sign(indices)
            if sign == 0:
                continue
            value = _normalize_coefficient(value) * sign
            if key in stored:
                value = stored[key] + value
            stored[key] = _normalize_coefficient(value)
        self.terms = {k: v for k, v in stored.items() if not _is_zero(v)}

    @classmethod
    def zero(cls, q):
        return cls(q)

    @classmethod
    def scalar(cls, q, value):
        return cls(q, {(): value})

    @classmethod
    def one(cls, q):
        return cls.scalar(q, 1)

    @classmethod
    def basis(cls, q, *indices):
        '''
        λ_I for the given 1-based indices, e.g. AltForm.basis(2, 1, 2) is λ_12
        '''
        return cls(q, {tuple(indices): 1})

    @property
    def top_index(self):
        return tuple(range(1, 2 * self.q + 1))

    def degrees(self):
        return sorted({len(k) for k in self.terms})

    def is_zero(self):
        return not self.terms

    def is_homogeneous_of(self, degree):
        return all(len(k) == degree for k in self.terms)

    def homogeneous_part(self, degree):
        return AltForm(self.q, {k: v for k, v in self.terms.items() if len(k) == degree})

    def coefficient(self, indices):
        sign, key = _sort_with_sign(indices)
        if sign == 0:
            return Fraction(0)
        return self.terms.get(key, Fraction(0)) * sign

    def _check_rank(self, other):
        if other.q != self.q:
            raise RankMismatchException()

    def _coerce(self, other):
        if isinstance(other, AltForm):
            self._check_rank(other)
            return other
        if isinstance(other, (int, Fraction, TPoly)):
            return AltForm.scalar(self.q, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return AltForm(self.q, terms)

    __radd__ = __add__

    def __neg__(self):
        return AltForm(self.q, {k: -v for k, v in self.terms.items()})

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
        # Scalars only; the exterior product is ^
        if not isinstance(other, (int, Fraction, TPoly)):
            return NotImplemented
        return AltForm(self.q, {k: v * other for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return AltForm(self.q, {k: v / Fraction(other) for k, v in self.terms.items()})

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, AltForm) else other
        if other is None:
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(
            f"({v})λ{''.join(map(str, k))}" if k else f"({v})"
            for k, v in sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0])))
        return f"AltForm(q={self.q}, {body or '0'})"


def wedge(a, b):
    '''
    Exterior product with shuffle signs. Terms sharing an index vanish.
    '''
    if a.q != b.q:
        raise RankMismatchException()
    terms = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            if set(ka) & set(kb):
                continue
            inversions = sum(1 for i in ka for j in kb if i > j)
            value = va * vb if inversions % 2 == 0 else -(va * vb)
            key = tuple(sorted(ka + kb))
            terms[key] = terms[key] + value if key in terms else value
    return AltForm(a.q, terms)


def exp_even(a):
    '''
    Returns exp(a) = sum_k a^k / k! for a form whose components all have even positive degree.

    The sum stops once the powers pass degree 2q.
    '''
    if any(len(k) % 2 for k in a.terms):
        raise OddFormExponentialException()
    if any(len(k) == 0 for k in a.terms):
        raise NonNilpotentExponentialException()
    result = AltForm.one(a.q)
    power = AltForm.one(a.q)
    for k in range(1, a.q + 1):
        power = wedge(power, a)
        if power.is_zero():
            break
        result = result + power / factorial(k)
    return result


def evaluate_top(a):
    '''
    Coefficient of λ_{1...2q}, i.e. the form evaluated on the oriented basis (h_1, ..., h_2q)
    '''
    return a.terms.get(a.top_index, Fraction(0))


def pairing_matrix(q, h):
    '''
    Converts h to a 2q x 2q tuple of Fractions, checking its shape and antisymmetry
    '''
    size = 2 * q
    if len(h) != size or any(len(row) != size for row in h):
        raise RankMismatchException()
    matrix = tuple(tuple(to_rational(v) for v in row) for row in h)
    for i in range(size):
        for j in range(i, size):
            if matrix[i][j] != -matrix[j][i]:
                raise NonAntisymmetricPairingException()
    return matrix


def standard_symplectic(q):
    '''
    The matrix with h_{2k-1,2k} = 1 = -h_{2k,2k-1}, i.e. a symplectic basis of H^1
    '''
    size = 2 * q
    h = [[Fraction(0)] * size for _ in range(size)]
    for k in range(q):
        h[2 * k][2 * k + 1] = Fraction(1)
        h[2 * k + 1][2 * k] = Fraction(-1)
    return tuple(tuple(row) for row in h)


def theta_form(q, h):
    '''
    θ = sum_{i<j} h_ij λ_i ∧ λ_j
    '''
    matrix = pairing_matrix(q, h)
    terms = {}
    for i in range(2 * q):
        for j in range(i + 1, 2 * q):
            if matrix[i][j]:
                terms[(i + 1, j + 1)] = matrix[i][j]
    return AltForm(q, terms)


def symplectic_form(q):
    return theta_form(q, standard_symplectic(q))
