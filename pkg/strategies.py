"""Hypothesis strategies for rings, elements and bundles, shared by the property tests."""
import itertools
from typing import List, Sequence, Tuple

from hypothesis import strategies as st

from projtc.algebra import Element, GeneratorSpec, PresentedRing
from projtc.bundle import BundleSpec, TotalSwClass


def exponentVectors(degrees: Sequence[int], target: int, bounds: Sequence[int]) -> List[Tuple[int, ...]]:
    """All e with sum e_i * degrees_i == target and e_i < bounds_i."""
    ranges = [range(min(b - 1, target // d) + 1) for d, b in zip(degrees, bounds)]
    return [e for e in itertools.product(*ranges) if sum(x * d for x, d in zip(e, degrees)) == target]


@st.composite
def presentedRings(draw, maxGenerators: int = 4, maxDegree: int = 2, maxPower: int = 4, maxTop: int = 12, monomialOnly: bool = False, minTop: int = 0):
    count = draw(st.integers(1, maxGenerators))
    generators = list()
    for i in range(count):
        degree = draw(st.integers(1, maxDegree))
        power = draw(st.integers(1, maxPower))
        rhs = Element()
        if not monomialOnly:
            degrees = [g.degree for g in generators] + [degree]
            target = power * degree
            bounds = [target // d + 1 for d in degrees[:-1]] + [power]
            candidates = exponentVectors(degrees, target, bounds)
            if candidates:
                rhs = Element(frozenset(draw(st.lists(st.sampled_from(candidates), max_size=3, unique=True))))
        generators.append(GeneratorSpec(f"g{i}", degree, power, rhs))
    return PresentedRing(generators, draw(st.integers(minTop, maxTop)))


@st.composite
def rawElements(draw, ring: PresentedRing, maxExponent: int = 4, maxTerms: int = 5):
    vector = st.tuples(*[st.integers(0, maxExponent)] * ring.NumGenerators)
    return Element.of(*draw(st.lists(vector, max_size=maxTerms)))


@st.composite
def homogeneousElements(draw, ring: PresentedRing, degree: int = None):
    if degree is None:
        degree = draw(st.integers(0, ring.TopDimension))
    basis = ring.monomialBasis(degree)
    if not basis:
        return Element()
    return Element(frozenset(draw(st.lists(st.sampled_from(basis), max_size=min(len(basis), 8), unique=True))))


@st.composite
def monomialQuotients(draw, maxGenerators: int = 4, maxDegree: int = 2, maxDim: int = 6):
    """H* of a random base: generators with power rules g^e = 0 and a top dimension."""
    count = draw(st.integers(1, maxGenerators))
    generators = [GeneratorSpec(f"g{i}", draw(st.integers(1, maxDegree)), draw(st.integers(2, 4))) for i in range(count)]
    return PresentedRing(generators, draw(st.integers(1, maxDim)))


@st.composite
def totalClasses(draw, base: PresentedRing, rank: int):
    value = base.one()
    for k in range(1, min(rank, base.TopDimension) + 1):
        basis = base.monomialBasis(k)
        if basis:
            value = base.add(value, Element(frozenset(draw(st.lists(st.sampled_from(basis), max_size=3, unique=True)))))
    return TotalSwClass(value, rank)


@st.composite
def bundleSpecs(draw, minRank: int = 3, maxRank: int = 6, maxGenerators: int = 4, maxDim: int = 6):
    base = draw(monomialQuotients(maxGenerators=maxGenerators, maxDim=maxDim))
    rank = draw(st.integers(minRank, maxRank))
    return BundleSpec(base, base.TopDimension, rank, draw(totalClasses(base, rank)), draw(st.booleans()))
