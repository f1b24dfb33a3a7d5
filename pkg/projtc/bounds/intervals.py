"""TC intervals with provenance.

Every function returns a `BoundInterval` whose `candidates` list all bounds that
were considered, and whose `lowerSource` / `upperSource` name the winners.
TC is reduced throughout: TC(point) = 0.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from vlutils.logger import LoggerBase

from projtc.bounds.heights import genusInterval, height, relativeHeight
from projtc.bundle import BundleSpec, ProjectiveModel
from projtc.consts import Consts
from projtc.errors import InvariantViolation, UnsupportedRankError


__all__ = [
    "Source",
    "Side",
    "Bound",
    "BoundInterval",
    "pointFiberInterval",
    "fiberTcInterval",
    "circleTcInterval",
    "projectiveTcInterval",
]


class Source(Enum):
    KernelHeight = "kernel-height"
    RelativeHeight = "relative-height"
    FiberTc = "fiber-tc"
    FiberDimension = "fiber-dimension"
    CircleDimension = "circle-dimension"
    OrientationGenus = "orientation-genus"
    ClosedManifoldCircle = "closed-manifold-circle"
    ClosedManifoldProjective = "closed-manifold-projective"
    OrientableExact = "orientable-exact"
    PointFiber = "point-fiber"

    def __str__(self):
        return str(self.value)

    @property
    def Tag(self) -> str:
        """Provenance tag of the result this bound comes from, as written in reports."""
        return _SourceTags[self]


_SourceTags = {
    Source.KernelHeight: "Cor 4.10",
    Source.RelativeHeight: "Thm 3.8",
    Source.FiberTc: "fiber-TC",
    Source.FiberDimension: "Prop 2.4",
    Source.CircleDimension: "Cor 3.6",
    Source.OrientationGenus: "Thm 3.5",
    Source.ClosedManifoldCircle: "Thm 3.7",
    Source.ClosedManifoldProjective: "Thm 5.1",
    Source.OrientableExact: "orientable-exact",
    Source.PointFiber: "point-fiber",
}


class Side(Enum):
    Lower = "lower"
    Upper = "upper"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Bound:
    source: Source
    side: Side
    value: int


@dataclass(frozen=True)
class BoundInterval:
    """`upper = None` means unbounded.

    Raises:
        InvariantViolation: On construction with lower > upper.
    """
    lower: int
    upper: Optional[int]
    lowerSource: Source
    upperSource: Optional[Source]
    candidates: Tuple[Bound, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.lower < 0:
            raise InvariantViolation(f"Negative lower bound {self.lower} from {self.lowerSource}.")
        if self.upper is not None and self.lower > self.upper:
            raise InvariantViolation(f"Lower bound {self.lower} ({self.lowerSource}) exceeds upper bound {self.upper} ({self.upperSource}).")

    @property
    def Exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def __str__(self) -> str:
        upper = "∞" if self.upper is None else self.upper
        return f"[{self.lower}, {upper}]"


def _pick(candidates: Tuple[Bound, ...]) -> BoundInterval:
    lowers = [c for c in candidates if c.side is Side.Lower]
    uppers = [c for c in candidates if c.side is Side.Upper]
    # first listed wins ties
    lower = max(lowers, key=lambda c: c.value)
    upper = min(uppers, key=lambda c: c.value) if uppers else None
    return BoundInterval(lower.value, None if upper is None else upper.value, lower.source, None if upper is None else upper.source, tuple(candidates))


def pointFiberInterval() -> BoundInterval:
    candidates = (Bound(Source.PointFiber, Side.Lower, 0), Bound(Source.PointFiber, Side.Upper, 0))
    return _pick(candidates)


def fiberTcInterval(d: int) -> BoundInterval:
    """Known bounds on TC(RP^d).

    Exact for d in {1, 3, 7} (d) and for powers of 2 (2d - 1). For other odd d the
    upper bound is 2d - (number of ones of d) - k, with k = 0, 1, 1, 4 for d = 1, 3, 5, 7 mod 8.

    Raises:
        UnsupportedRankError: If d < 1.
    """
    if d < 1:
        raise UnsupportedRankError(f"Fiber dimension must be positive, got {d}.")
    if d in (1, 3, 7):
        lower = upper = d
    elif d & (d - 1) == 0:
        lower = upper = 2 * d - 1
    elif d % 2 == 1:
        lower, upper = d + 1, 2 * d - bin(d).count("1") - {1: 0, 3: 1, 5: 1, 7: 4}[d % 8]
    else:
        lower, upper = d + 1, 2 * d - 1
    return _pick((Bound(Source.FiberTc, Side.Lower, lower), Bound(Source.FiberTc, Side.Upper, upper)))


def circleTcInterval(spec: BundleSpec, logger: Union[logging.Logger, LoggerBase] = logging.root) -> BoundInterval:
    """TC of the projectivization of a rank-2 bundle, i.e. of a circle bundle.

    Orientable bundles are exact at 1. Otherwise the lower bound is one plus the
    relative height of w_1 modulo w_2, and the upper bound is one plus the genus
    of w_1, which is at most n - 1 on a closed manifold with w_1^n = 0.

    Raises:
        UnsupportedRankError: If rank != 2.
    """
    if spec.rank != 2:
        raise UnsupportedRankError(f"Circle bundles have rank 2, got {spec.rank}.")
    base, n = spec.base, spec.baseDim
    w1, w2 = spec.W1, spec.W2
    if not w1:
        logger.debug("w_1 = 0, orientable circle bundle.")
        return _pick((Bound(Source.OrientableExact, Side.Lower, 1), Bound(Source.OrientableExact, Side.Upper, 1)))

    candidates = [Bound(Source.FiberTc, Side.Lower, 1)]
    relative = relativeHeight(base, w1, w2)
    logger.debug("Relative height h(w_1 | w_2) = %d.", relative)
    if relative != Consts.InIdealAtZero:
        candidates.append(Bound(Source.RelativeHeight, Side.Lower, relative + 1))

    genus = genusInterval(base, w1, n, spec.closedManifold)
    logger.debug("Genus of w_1 in [%d, %d].", genus.lower, genus.upper)
    if spec.closedManifold and genus.upper < n:
        candidates.append(Bound(Source.ClosedManifoldCircle, Side.Upper, genus.upper + 1))
    if genus.exact:
        candidates.append(Bound(Source.OrientationGenus, Side.Upper, genus.upper + 1))
    candidates.append(Bound(Source.CircleDimension, Side.Upper, n + 1))
    return _pick(tuple(candidates))


def projectiveTcInterval(model: ProjectiveModel, spec: BundleSpec, logger: Union[logging.Logger, LoggerBase] = logging.root) -> BoundInterval:
    """TC of the projectivization of a bundle of rank >= 3.

    The lower bound is the larger of the height of vL + vR and TC(RP^d). The upper
    bound is n + 2d, lowered by one on a closed manifold.

    Raises:
        UnsupportedRankError: If rank < 3.
        InvariantViolation: If the lower bound exceeds the upper bound.
    """
    if spec.rank < 3:
        raise UnsupportedRankError(f"Projective pipeline needs rank >= 3, got {spec.rank}; use the circle pipeline.")
    n, d = spec.baseDim, spec.D
    kernelHeight = height(model.e2bRing, model.kernelClass)
    logger.debug("Height of vL + vR is %d.", kernelHeight)
    candidates = [
        Bound(Source.KernelHeight, Side.Lower, kernelHeight),
        Bound(Source.FiberTc, Side.Lower, fiberTcInterval(d).lower),
    ]
    if spec.closedManifold:
        candidates.append(Bound(Source.ClosedManifoldProjective, Side.Upper, n + 2 * d - 1))
    candidates.append(Bound(Source.FiberDimension, Side.Upper, n + 2 * d))
    return _pick(tuple(candidates))
