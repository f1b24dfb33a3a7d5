from dataclasses import dataclass

import numpy as np

from projtc.algebra import Element, PresentedRing, gf2InRowSpan
from projtc.consts import Consts
from projtc.errors import InvalidClassError, PresentationError


__all__ = [
    "GenusInterval",
    "height",
    "inIdeal",
    "relativeHeight",
    "genusInterval",
]


@dataclass(frozen=True)
class GenusInterval:
    lower: int
    upper: int
    exact: bool

    def __post_init__(self):
        if self.lower > self.upper:
            raise InvalidClassError(f"Empty genus interval [{self.lower}, {self.upper}].")
        if self.exact and self.lower != self.upper:
            raise InvalidClassError(f"Genus interval [{self.lower}, {self.upper}] cannot be exact.")


def _positiveDegree(ring: PresentedRing, x: Element) -> int:
    degree = ring.degreeOf(x)
    if degree == 0:
        raise PresentationError(f"`{ring.render(x)}` has degree 0; its powers never vanish.")
    return degree


def height(ring: PresentedRing, x: Element) -> int:
    """Largest k with x^k != 0, and 0 for x = 0.

    Raises:
        PresentationError: If `x` is inhomogeneous or a nonzero constant.
    """
    x = ring.normalForm(x)
    if not x:
        return 0
    _positiveDegree(ring, x)
    k, power = 1, x
    while True:
        power = ring.mul(power, x)
        if not power:
            return k
        k += 1


def inIdeal(ring: PresentedRing, x: Element, b: Element) -> bool:
    """Whether homogeneous `x` lies in the principal ideal (b), decided by GF(2) elimination in the degree of `x`."""
    x, b = ring.normalForm(x), ring.normalForm(b)
    if not x:
        return True
    if not b:
        return False
    degree, bDegree = ring.degreeOf(x), ring.degreeOf(b)
    if degree < bDegree:
        return False
    rows = [ring.coordinates(ring.mul(ring.collect([m]), b), degree) for m in ring.monomialBasis(degree - bDegree)]
    span = np.array(rows, dtype=np.uint8).reshape(len(rows), len(ring.monomialBasis(degree)))
    return gf2InRowSpan(span, ring.coordinates(x, degree))


def relativeHeight(base: PresentedRing, a: Element, b: Element) -> int:
    """Largest k with a^k outside the ideal (b).

    Returns:
        int: The relative height, or `Consts.InIdealAtZero` when 1 lies in (b).

    Raises:
        PresentationError: If `a` or `b` is inhomogeneous, or `a` is a nonzero constant.
    """
    a, b = base.normalForm(a), base.normalForm(b)
    if a:
        _positiveDegree(base, a)
    base.degreeOf(b)
    k, power = 0, base.one()
    while not inIdeal(base, power, b):
        k += 1
        power = base.mul(power, a)
    return k - 1 if k > 0 else Consts.InIdealAtZero


def genusInterval(base: PresentedRing, alpha: Element, n: int, closedManifold: bool) -> GenusInterval:
    """Bounds height(α) <= genus(α) <= n of a degree-1 class.

    On a closed manifold the genus reaches n exactly when α^n != 0, otherwise it is at most n - 1.
    """
    alpha = base.normalForm(alpha)
    if not alpha:
        return GenusInterval(0, 0, True)
    if base.degreeOf(alpha) != 1:
        raise PresentationError(f"Genus needs a degree-1 class, got `{base.render(alpha)}`.")
    lower = height(base, alpha)
    upper = n
    if closedManifold and lower < n:
        upper = n - 1
    return GenusInterval(lower, upper, lower == upper)
