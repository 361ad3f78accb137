'''
Volumes of Quot spaces of split bundles by summing over the fixed point components of
the torus action that scales the summands of ℰ_0 with weights w_1, ..., w_r.
'''
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import sympy
from django.conf import settings

from scalars.polynomials import TPoly, u_coefficient
from scalars.utils import falling_factorial

from .exceptions import InsufficientWeightCandidatesException, UConcentrationException
from .integrand import integrand
from .problems import Composition, WeightVector

logger = logging.getLogger(__name__)


def compositions(d, r):
    '''
    Weak compositions of d into r parts, first part descending: (d, 0, ...), ..., (0, ..., d)
    '''
    if r == 1:
        return [Composition((d,))]
    result = []
    for first in range(d, -1, -1):
        for rest in compositions(d - first, r - 1):
            result.append(Composition((first,) + rest.parts))
    return result


def localization_sign(p):
    '''
    (-1)^(ḡ C(r,2) + (r-1)(l-d))
    '''
    exponent = p.g_bar * comb(p.r, 2) + (p.r - 1) * (p.total_degree - p.d)
    return -1 if exponent % 2 else 1


def evaluate_composition(p, c, w):
    '''
    Integrates the integrand over the component of composition c.

    Only monomials x^α y^β of multidegree exactly (d_1, ..., d_r) contribute; each is
    evaluated as its u^0 coefficient times prod_i g(g-1)...(g-β_i+1).
    '''
    series = integrand(p, c, w)
    total = TPoly()
    for exponents, coefficient in series.homogeneous_part(c.parts).items():
        if coefficient.support() != [0]:
            raise UConcentrationException(
                f"nonzero u-degree in top coefficient: composition {c.parts}, monomial {exponents}, "
                f"u-exponents {coefficient.support()}")
        weight = Fraction(1)
        for beta in exponents[1::2]:
            weight *= falling_factorial(p.g, beta)
        if weight:
            total = total + u_coefficient(coefficient, 0) * weight
    logger.debug("composition %s contributes %s", c.parts, total)
    return total


def _max_workers(max_workers):
    if max_workers is None:
        max_workers = settings.QUOTVOL['MAX_WORKERS']
    return max(1, int(max_workers))


def quot_volume(p, w=None, max_workers=None):
    '''
    Normalized volume v(𝔱) = sign / (rd)! * sum over compositions of evaluate_composition.

    Compositions may be evaluated on a thread pool; the sum is always taken in composition
    order, so the result does not depend on scheduling.
    '''
    if w is None:
        w = WeightVector.default(p.r)
    elif not isinstance(w, WeightVector):
        w = WeightVector(tuple(w))
    if len(w) != p.r:
        raise ValueError(f"expected {p.r} weights, got {len(w)}")

    components = compositions(p.d, p.r)
    workers = _max_workers(max_workers)
    if workers > 1 and len(components) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            contributions = list(executor.map(lambda c: evaluate_composition(p, c, w), components))
    else:
        contributions = [evaluate_composition(p, c, w) for c in components]

    total = TPoly()
    for contribution in contributions:
        total = total + contribution
    return total * localization_sign(p) / factorial(p.dimension)


def default_weight_candidates(r, seed=None, bound=None):
    '''
    The weights (1, ..., r), the first r primes and one seeded random rational vector
    '''
    if seed is None:
        seed = settings.QUOTVOL['WEIGHT_SEED']
    if bound is None:
        bound = settings.QUOTVOL['RANDOM_WEIGHT_BOUND']
    rng = random.Random(seed)
    drawn = []
    while len(drawn) < r:
        candidate = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if candidate not in drawn:
            drawn.append(candidate)
    return [
        WeightVector.default(r),
        WeightVector(tuple(int(sympy.prime(i)) for i in range(1, r + 1))),
        WeightVector(tuple(drawn)),
    ]


@dataclass(frozen=True)
class WeightIndependenceReport:
    passed: bool
    volumes: list = field(default_factory=list)

    @property
    def candidates(self):
        return len(self.volumes)


def verify_weight_independence(p, ws=None, max_workers=None):
    '''
    Computes quot_volume for every weight vector and checks the results are identical
    '''
    if ws is None:
        ws = default_weight_candidates(p.r)
    ws = [w if isinstance(w, WeightVector) else WeightVector(tuple(w)) for w in ws]
    if len(ws) < 2:
        raise InsufficientWeightCandidatesException()
    volumes = [(w, quot_volume(p, w, max_workers=max_workers)) for w in ws]
    passed = all(volume == volumes[0][1] for _, volume in volumes)
    if not passed:
        logger.warning("volume of %s depends on the weights", p)
    return WeightIndependenceReport(passed=passed, volumes=volumes)
