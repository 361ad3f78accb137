from dataclasses import dataclass
from fractions import Fraction

from scalars.utils import rational_string, to_rational

from .exceptions import DegenerateWeightsException


@dataclass(frozen=True)
class QuotProblem:
    '''
    Quot space of a split bundle ℰ_0 = ℒ_1 ⊕ ... ⊕ ℒ_r (deg ℒ_i = l[i]) on a genus g curve,
    parametrizing subsheaves of full rank whose quotient has length d.
    '''
    g: int
    r: int
    l: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, 'l', tuple(int(li) for li in self.l))
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if self.r < 1:
            raise ValueError("rank must be positive")
        if self.d < 0:
            raise ValueError("d must be non-negative")
        if len(self.l) != self.r:
            raise ValueError(f"expected {self.r} line bundle degrees, got {len(self.l)}")

    @property
    def total_degree(self):
        return sum(self.l)

    @property
    def g_bar(self):
        return self.g - 1

    @property
    def mu(self):
        return Fraction(self.total_degree, self.r)

    @property
    def deg_E(self):
        '''
        Degree of the kernel
        '''
        return self.total_degree - self.d

    @property
    def dimension(self):
        return self.r * self.d


@dataclass(frozen=True)
class Composition:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError("composition parts must be non-negative")

    @property
    def total(self):
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def __post_init__(self):
        weights = tuple(to_rational(w) for w in self.weights)
        if len(set(weights)) != len(weights):
            raise DegenerateWeightsException(f"weights must be pairwise distinct, got {[str(w) for w in weights]}")
        object.__setattr__(self, 'weights', weights)

    @classmethod
    def default(cls, r):
        return cls(tuple(range(1, r + 1)))

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, index):
        return self.weights[index]

    def as_strings(self):
        return [rational_string(w) for w in self.weights]
