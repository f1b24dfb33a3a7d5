"""Total and dual Stiefel-Whitney classes, and the Q-polynomials of the projective relation."""
from dataclasses import dataclass
from typing import List, Tuple

from projtc.algebra import Element, PresentedRing
from projtc.errors import InvalidClassError


__all__ = [
    "TotalSwClass",
    "DualSwClass",
    "dualTotalSw",
    "qPoly",
]


@dataclass(frozen=True)
class TotalSwClass:
    """w = 1 + w_1 + w_2 + ... of a bundle of rank `rankBound`.

    Args:
        value (Element): The total class, in the base ring.
        rankBound (int): Bundle rank `d + 1`; components above it must vanish.
    """
    value: Element
    rankBound: int

    def validate(self, base: PresentedRing):
        """Raises:
            InvalidClassError: If w_0 != 1 or a component above `rankBound` is nonzero.
        """
        if base.gradedPart(self.value, 0) != base.one():
            raise InvalidClassError(f"Total class `{base.render(self.value)}` must start with 1.")
        for m in self.value.monomials:
            degree = base.monomialDegree(m)
            if degree > self.rankBound:
                raise InvalidClassError(f"Class exceeds rank bound: `{base.renderMonomial(m)}` has degree {degree} > {self.rankBound}.")

    def components(self, base: PresentedRing) -> List[Element]:
        """[w_0, w_1, ..., w_{rankBound}] in `base`."""
        return [base.gradedPart(self.value, i) for i in range(self.rankBound + 1)]


@dataclass(frozen=True)
class DualSwClass:
    """w̄ with w·w̄ = 1.

    Args:
        value (Element): The dual class in the base ring.
        topDegree (int): Largest `m` with w̄_m != 0 (0 if only w̄_0 survives).
        parts (Tuple[Element, ...]): w̄_0 ... w̄_top of the base ring.
    """
    value: Element
    topDegree: int
    parts: Tuple[Element, ...]

    def component(self, i: int) -> Element:
        if 0 <= i < len(self.parts):
            return self.parts[i]
        return Element()


def dualTotalSw(base: PresentedRing, w: TotalSwClass) -> DualSwClass:
    """Invert the total class degree by degree: w̄_i = sum_{j=1..min(i, d+1)} w_j·w̄_{i-j}.

    Every degree up to the base top dimension is computed.

    Raises:
        InvalidClassError: If `w` violates its invariants.
    """
    w.validate(base)
    ws = w.components(base)
    parts = [base.one()]
    for i in range(1, base.TopDimension + 1):
        parts.append(base.sum(base.mul(ws[j], parts[i - j]) for j in range(1, min(i, w.rankBound) + 1)))
    topDegree = max((i for i, p in enumerate(parts) if p), default=0)
    return DualSwClass(base.sum(parts), topDegree, tuple(parts))


def qPoly(baseW: TotalSwClass, i: int, x: Element, ambient: PresentedRing) -> Element:
    """Q_i(x) = x^i + w_1·x^{i-1} + ... + w_i in `ambient`.

    `ambient` must start with the base generators; `x` is a degree-1 class of it.

    Raises:
        InvalidClassError: If `i` is outside [0, d + 1] or `x` is not of degree 1 (or zero).
        PresentationError: If `x` is inhomogeneous.
    """
    if i < 0 or i > baseW.rankBound:
        raise InvalidClassError(f"Q-polynomial index {i} is outside [0, {baseW.rankBound}].")
    degree = ambient.degreeOf(ambient.normalForm(x))
    if degree not in (None, 1):
        raise InvalidClassError(f"Q-polynomial argument must have degree 1, got degree {degree}.")
    w = ambient.embed(baseW.value)
    return ambient.sum(ambient.mul(ambient.gradedPart(w, j), ambient.pow(x, i - j)) for j in range(i + 1))
