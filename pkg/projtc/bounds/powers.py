from projtc.algebra import Element, PresentedRing
from projtc.bounds.heights import height
from projtc.bundle import BundleSpec, ProjectiveModel, qPoly
from projtc.errors import PresentationError


__all__ = [
    "binomMod2",
    "binomialPower",
    "heightByExpansion",
    "checkPowerVanishing",
    "powerExpansionRhs",
    "checkPowerExpansion",
]


def binomMod2(a: int, b: int) -> int:
    """C(a, b) mod 2 by Lucas: odd iff every binary digit of b is at most the one of a."""
    if a < 0 or b < 0:
        raise ValueError(f"Binomial arguments must be non-negative, got ({a}, {b}).")
    if b > a:
        raise ValueError(f"Binomial needs b <= a, got ({a}, {b}).")
    return int(b & ~a == 0)


def binomialPower(ring: PresentedRing, x1: Element, x2: Element, k: int) -> Element:
    """(x1 + x2)^k = sum_i C(k, i)·x1^i·x2^(k-i), summing only odd coefficients."""
    return ring.sum(ring.mul(ring.pow(x1, i), ring.pow(x2, k - i)) for i in range(k + 1) if binomMod2(k, i))


def heightByExpansion(ring: PresentedRing, x1: Element, x2: Element) -> int:
    k = 0
    while binomialPower(ring, x1, x2, k + 1):
        k += 1
    return k


def checkPowerVanishing(model: ProjectiveModel, spec: BundleSpec) -> bool:
    """(vL + vR)^{n+2d} = 0, which bounds the height of vL + vR by n + 2d - 1."""
    return not model.e2bRing.pow(model.kernelClass, spec.baseDim + 2 * spec.D)


def _enhancement(model: ProjectiveModel, which: str) -> Element:
    if which == "L":
        return model.vL
    if which == "R":
        return model.vR
    raise ValueError(f"Unknown enhancement `{which}`, expected `L` or `R`.")


def powerExpansionRhs(model: ProjectiveModel, spec: BundleSpec, which: str, i: int) -> Element:
    """sum_j w̄_{i+j}·Q_{d-j}(x) for x = vL or vR, over 0 <= j <= d."""
    ring, d = model.e2bRing, spec.D
    x = _enhancement(model, which)
    terms = list()
    for j in range(d + 1):
        dual = model.dual.component(i + j)
        if dual:
            terms.append(ring.mul(ring.embed(dual), qPoly(spec.totalSw, d - j, x, ring)))
    return ring.sum(terms)


def checkPowerExpansion(model: ProjectiveModel, spec: BundleSpec, which: str, i: int) -> bool:
    """x^{d+i} equals `powerExpansionRhs` for x = vL or vR.

    At the largest index i = n + d the height of x is also required to be m + d,
    where m is the top degree of the dual class.

    Raises:
        PresentationError: If i < 1 or d + i > n + 2d.
    """
    d, n = spec.D, spec.baseDim
    if i < 1 or d + i > n + 2 * d:
        raise PresentationError(f"Power expansion index {i} is outside [1, {n + d}].")
    ring = model.e2bRing
    x = _enhancement(model, which)
    if ring.pow(x, d + i) != powerExpansionRhs(model, spec, which, i):
        return False
    if i == n + d:
        return height(ring, x) == model.dual.topDegree + d
    return True
