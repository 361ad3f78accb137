'''
Input data of the Abelian volume formulas.
'''
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from exterior.alternating import AltForm, pairing_matrix
from scalars.utils import to_rational

from .exceptions import (
    EmptyProjectiveBundleException,
    GradedDegreeException,
    IncompletePairingDataException,
    NonIntegralRankException,
)


@dataclass(frozen=True)
class CurveQuotProblem:
    '''
    Quotients of length d of a line bundle on a genus g curve, with kernel of degree deg_E.
    The Quot space is the symmetric power X^(d).
    '''
    g: int
    deg_E: Fraction
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if self.d < 0:
            raise ValueError("d must be non-negative")
        object.__setattr__(self, 'deg_E', to_rational(self.deg_E))


@dataclass(frozen=True)
class AcyclicData:
    '''
    Pairing data of an acyclic pair (ℒ, ℰ_0) over a base of dimension n.

    pairings[s] is <m^s ∪ C_{n-s}, [X]>, h is the antisymmetric θ matrix on H^1 and
    kappa_forms maps (i, s) to the degree-2i form 𝔨 attached to m^s C_{n-i-s}.
    '''
    n: int
    q: int
    deg_E: Fraction
    pairings: tuple
    h: tuple
    kappa_forms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("the base dimension must be positive")
        if self.q < 0:
            raise ValueError("q must be non-negative")
        if len(self.pairings) != self.n + 1:
            raise IncompletePairingDataException(
                f"expected {self.n + 1} pairing numbers, got {len(self.pairings)}")
        object.__setattr__(self, 'deg_E', to_rational(self.deg_E))
        object.__setattr__(self, 'pairings', tuple(to_rational(p) for p in self.pairings))
        object.__setattr__(self, 'h', pairing_matrix(self.q, self.h))
        for (i, s), form in self.kappa_forms.items():
            if not isinstance(form, AltForm) or form.q != self.q:
                raise IncompletePairingDataException(f"kappa form ({i}, {s}) is not a form on H^1 of rank {2 * self.q}")
            if not form.is_homogeneous_of(2 * i):
                raise GradedDegreeException(f"kappa form ({i}, {s}) must have degree {2 * i}")

    def required_kappa_keys(self):
        return [(i, s) for i in range(1, self.q + 1) for s in range(0, self.n - i + 1)]

    @property
    def rank(self):
        '''
        R = sum_s (-1)^s P_s / s!, the rank of the bundle of sections 𝒱
        '''
        total = sum((Fraction((-1) ** s, factorial(s)) * p for s, p in enumerate(self.pairings)), Fraction(0))
        if total.denominator != 1:
            raise NonIntegralRankException(f"rank of the bundle of sections is {total}")
        return int(total)

    @property
    def dimension(self):
        '''
        N = R + q - 1, the complex dimension of the projective bundle
        '''
        rank = self.rank
        if rank < 1:
            raise EmptyProjectiveBundleException(f"empty projective bundle (R = {rank})")
        return rank + self.q - 1
