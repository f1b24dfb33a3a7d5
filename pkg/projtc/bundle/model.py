import logging
from dataclasses import dataclass
from typing import List, Union

from vlutils.logger import LoggerBase

from projtc.algebra import Element, GeneratorSpec, Monomial, PresentedRing
from projtc.bundle.charClasses import TotalSwClass, DualSwClass, dualTotalSw
from projtc.errors import InvalidClassError, PresentationError, UnsupportedRankError


__all__ = [
    "BundleSpec",
    "ProjectiveModel",
    "buildProjectiveModel",
    "twistEnhancement",
    "deltaStar",
    "swapEnhancements",
    "lerayHirschRank",
]


@dataclass(frozen=True)
class BundleSpec:
    """A vector bundle over a base given by its cohomology presentation.

    `closedManifold` is a user assertion and never verified. Rank 1 is accepted
    here; it is reported as a point fiber and never modelled.
    """
    base: PresentedRing
    baseDim: int
    rank: int
    totalSw: TotalSwClass
    closedManifold: bool = False
    name: str = ""

    def __post_init__(self):
        if self.baseDim != self.base.TopDimension:
            raise PresentationError(f"Base dimension {self.baseDim} differs from the ring top dimension {self.base.TopDimension}.")
        if self.rank < 1:
            raise UnsupportedRankError(f"Rank must be positive, got {self.rank}.")
        if self.totalSw.rankBound != self.rank:
            raise InvalidClassError(f"Total class is bounded by rank {self.totalSw.rankBound}, bundle has rank {self.rank}.")
        self.totalSw.validate(self.base)

    @property
    def D(self) -> int:
        """Fiber dimension: the fiber is RP^d."""
        return self.rank - 1

    @property
    def W1(self) -> Element:
        return self.base.gradedPart(self.totalSw.value, 1)

    @property
    def W2(self) -> Element:
        return self.base.gradedPart(self.totalSw.value, 2)


@dataclass(frozen=True)
class ProjectiveModel:
    """Cohomology of the projectivization E and of the fiberwise square E²_B.

    `eRing` is the base followed by `v`; `e2bRing` is the base followed by `vL`, `vR`.
    """
    spec: BundleSpec
    eRing: PresentedRing
    e2bRing: PresentedRing
    v: Element
    vL: Element
    vR: Element
    kernelClass: Element
    dual: DualSwClass

    @property
    def D(self) -> int:
        return self.spec.D


def _relationRhs(ws: List[Element], d: int, index: int, width: int) -> Element:
    # v^{d+1} -> w_{d+1} + w_d v + ... + w_1 v^d, written over `width` generators with v at `index`
    monomials = set()
    for i in range(1, d + 2):
        for m in ws[i].monomials:
            vector = list(m) + [0] * (width - len(m))
            vector[index] = d + 1 - i
            monomials ^= {tuple(vector)}
    return Element(frozenset(monomials))


def _extend(base: PresentedRing, names: List[str], rhs: List[Element], d: int, topDimension: int) -> PresentedRing:
    generators = list(base.Generators)
    generators.extend(GeneratorSpec(name, 1, d + 1, r) for name, r in zip(names, rhs))
    if base.NumGenerators > 0:
        return PresentedRing(generators, topDimension, base.NumGenerators, base.TopDimension)
    return PresentedRing(generators, topDimension)


def buildProjectiveModel(spec: BundleSpec, logger: Union[logging.Logger, LoggerBase] = logging.root) -> ProjectiveModel:
    """Build H*(E) and H*(E²_B) from the Leray-Hirsch presentation.

    Both enhancements carry the relation v^{d+1} = sum_i w_i·v^{d+1-i}. Base
    classes above the base dimension vanish in both rings.

    Raises:
        UnsupportedRankError: If rank < 2.
    """
    if spec.rank < 2:
        raise UnsupportedRankError(f"Rank {spec.rank} bundle has a point fiber; nothing to model.")
    base, d, n = spec.base, spec.D, spec.baseDim
    ws = spec.totalSw.components(base)
    k = base.NumGenerators

    eRing = _extend(base, ["v"], [_relationRhs(ws, d, k, k + 1)], d, n + d)
    e2bRing = _extend(base, ["vL", "vR"], [_relationRhs(ws, d, k, k + 1), _relationRhs(ws, d, k + 1, k + 2)], d, n + 2 * d)

    vL, vR = e2bRing.generator("vL"), e2bRing.generator("vR")
    dual = dualTotalSw(base, spec.totalSw)
    logger.debug("Built E with Betti numbers %s and E²_B with Betti numbers %s.", eRing.bettiNumbers(), e2bRing.bettiNumbers())
    return ProjectiveModel(spec, eRing, e2bRing, eRing.generator("v"), vL, vR, e2bRing.add(vL, vR), dual)


def twistEnhancement(model: ProjectiveModel, w1L: Element) -> Element:
    """Enhancement of P(ξ ⊗ L) = P(ξ): v' = v + p*(w_1(L)) in the E-ring.

    Raises:
        PresentationError: If `w1L` is not a degree-1 base class (or zero).
    """
    base = model.spec.base
    degree = base.degreeOf(base.normalForm(w1L))
    if degree not in (None, 1):
        raise PresentationError(f"w_1(L) must have degree 1, got degree {degree}.")
    return model.eRing.add(model.v, model.eRing.embed(w1L))


def _mapMonomials(ring: PresentedRing, x: Element, fn) -> Element:
    return ring.collect(fn(m) for m in x.monomials)


def deltaStar(model: ProjectiveModel, x: Element) -> Element:
    """Restriction along the diagonal E -> E²_B: vL, vR ↦ v."""
    k = model.spec.base.NumGenerators

    def _fn(m: Monomial) -> Monomial:
        return m[:k] + (m[k] + m[k + 1],)
    return _mapMonomials(model.eRing, x, _fn)


def swapEnhancements(model: ProjectiveModel, x: Element) -> Element:
    """The automorphism of E²_B exchanging vL and vR and fixing base classes."""
    k = model.spec.base.NumGenerators

    def _fn(m: Monomial) -> Monomial:
        return m[:k] + (m[k + 1], m[k])
    return _mapMonomials(model.e2bRing, x, _fn)


def lerayHirschRank(model: ProjectiveModel, degree: int, which: str = "E2B") -> int:
    """Dimension of H^degree predicted by Leray-Hirsch from the base Betti numbers.

    Args:
        which (str): "E" for the projectivization, "E2B" for the fiberwise square.
    """
    betti = model.spec.base.bettiNumbers()
    d = model.D

    def _b(k: int) -> int:
        return betti[k] if 0 <= k < len(betti) else 0

    if which == "E":
        return sum(_b(degree - i) for i in range(d + 1))
    if which == "E2B":
        return sum(_b(degree - i - j) for i in range(d + 1) for j in range(d + 1))
    raise ValueError(f"Unknown ring `{which}`, expected `E` or `E2B`.")
