'''
Degrees of Quot spaces under the Grothendieck embedding j_n into the Grassmannian of
s-planes in V = H^0(ℰ_0(n x_0)), followed by the Plücker embedding.

The pullback of O(1) is the normalized Kähler class at 𝔱 = n - ḡ, so the degree of the
image is (rd)! v(n - ḡ).
'''
import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Optional

from localization.volumes import quot_volume

from .exceptions import DegreeIntegralityException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddingParams:
    n: int
    s: int
    sections_dimension: int
    ambient_dimension: Optional[int]


def embedding_params(p, n):
    '''
    s = deg(E) + r(n - g + 1) and dim V = l + r(n - g + 1); the Plücker ambient space
    P(∧^s V) has dimension C(dim V, s) - 1 whenever 0 <= s <= dim V.
    '''
    twist = p.r * (n - p.g + 1)
    s = p.deg_E + twist
    sections_dimension = p.total_degree + twist
    ambient = None
    if 0 <= s <= sections_dimension:
        ambient = comb(sections_dimension, s) - 1
    return EmbeddingParams(n=n, s=s, sections_dimension=sections_dimension, ambient_dimension=ambient)


def embedding_warnings(p, n):
    warnings = []
    if n < p.g + p.d:
        warnings.append(f"n = {n} is below g + d = {p.g + p.d}: formula value; embedding not guaranteed")
    params = embedding_params(p, n)
    if params.s <= 0:
        warnings.append(f"plane dimension s = {params.s} is not positive for n = {n}")
    for message in warnings:
        logger.warning(message)
    return warnings


def grothendieck_degree(p, n, volume=None, max_workers=None):
    '''
    (rd)! v(n - ḡ) as an int; volume may be passed in when it is already known
    '''
    if n < 1:
        raise ValueError("the twist n must be a positive integer")
    if volume is None:
        volume = quot_volume(p, max_workers=max_workers)
    value = volume(n - p.g_bar) * factorial(p.dimension)
    if value.denominator != 1:
        raise DegreeIntegralityException(f"degree integrality violated: (rd)! v({n - p.g_bar}) = {value}")
    if value < 0:
        logger.warning("negative degree %s for n = %s; n is too small for an embedding", value, n)
    return int(value)
