"""Brute-force oracles. Deliberately naive, with hard caps."""
import functools
import itertools
from typing import List

from projtc.algebra import Element, PresentedRing
from projtc.bundle import ProjectiveModel, deltaStar
from projtc.consts import Consts
from projtc.errors import OracleCapError


__all__ = [
    "pascalMod2",
    "exhaustiveKernelDegree1",
    "idealMembershipBruteforce",
    "relativeHeightBruteforce",
]


@functools.lru_cache(maxsize=None)
def _pascalRow(a: int) -> tuple:
    if a == 0:
        return (1,)
    previous = _pascalRow(a - 1)
    return tuple((previous[b - 1] if b > 0 else 0) ^ (previous[b] if b < a else 0) for b in range(a + 1))


def pascalMod2(a: int, b: int) -> int:
    """C(a, b) mod 2 from the recurrence C(a, b) = C(a-1, b-1) + C(a-1, b).

    Raises:
        OracleCapError: If a > `Consts.PascalCap`.
    """
    if b < 0 or b > a:
        raise ValueError(f"Pascal oracle needs 0 <= b <= a, got ({a}, {b}).")
    if a > Consts.PascalCap:
        raise OracleCapError(f"Pascal oracle is capped at {Consts.PascalCap}, got {a}.")
    return _pascalRow(a)[b]


def exhaustiveKernelDegree1(model: ProjectiveModel) -> List[Element]:
    """Every nonzero degree-1 class of E²_B killed by restriction to the diagonal.

    Walks all 2^k combinations of the degree-1 basis in Gray-code order.

    Raises:
        OracleCapError: If the degree-1 part has dimension above `Consts.KernelEnumerationCap`.
    """
    ring = model.e2bRing
    basis = ring.monomialBasis(1)
    if len(basis) > Consts.KernelEnumerationCap:
        raise OracleCapError(f"Degree-1 part has dimension {len(basis)} > {Consts.KernelEnumerationCap}.")
    images = list()
    for m in basis:
        image = deltaStar(model, ring.collect([m]))
        images.append(frozenset(image.monomials))

    kernel = list()
    current, mask = frozenset(), 0
    for step in range(1, 2 ** len(basis)):
        bit = (step & -step).bit_length() - 1
        current = current ^ images[bit]
        mask ^= 1 << bit
        if not current:
            kernel.append(ring.collect(basis[i] for i in range(len(basis)) if mask >> i & 1))
    return sorted(kernel, key=ring.render)


def idealMembershipBruteforce(base: PresentedRing, x: Element, b: Element) -> bool:
    """Whether `x` is a sum of products m·b, m a monomial of complementary degree, trying every subset.

    Raises:
        OracleCapError: If there are more than `Consts.BruteforceCap` such products.
    """
    x, b = base.normalForm(x), base.normalForm(b)
    if not x:
        return True
    if not b:
        return False
    degree, bDegree = base.degreeOf(x), base.degreeOf(b)
    if degree < bDegree:
        return False
    products = [base.mul(base.collect([m]), b) for m in base.monomialBasis(degree - bDegree)]
    if len(products) > Consts.BruteforceCap:
        raise OracleCapError(f"{len(products)} products exceed the brute-force cap {Consts.BruteforceCap}.")
    for size in range(len(products) + 1):
        for subset in itertools.combinations(products, size):
            if base.sum(subset) == x:
                return True
    return False


def relativeHeightBruteforce(base: PresentedRing, a: Element, b: Element) -> int:
    """`relativeHeight` with membership decided by `idealMembershipBruteforce`."""
    k, power = 0, base.one()
    while not idealMembershipBruteforce(base, power, b):
        k += 1
        power = base.mul(power, a)
    return k - 1 if k > 0 else Consts.InIdealAtZero
