import pathlib

import pytest

from projtc.algebra import GeneratorSpec, PresentedRing
from projtc.bundle import BundleSpec, TotalSwClass, buildProjectiveModel


CORPUS = pathlib.Path(__file__).parent.joinpath("configs", "corpus")


@pytest.fixture
def corpusDir() -> pathlib.Path:
    return CORPUS


@pytest.fixture
def projectiveSpace():
    """H*(RP^n) = F2[beta] / beta^{n+1}."""
    def _build(n: int) -> PresentedRing:
        return PresentedRing([GeneratorSpec("beta", 1, n + 1)], n)
    return _build


@pytest.fixture
def torus() -> PresentedRing:
    return PresentedRing([GeneratorSpec("a1", 1, 2), GeneratorSpec("a2", 1, 2)], 2)


@pytest.fixture
def rp2Cubed() -> PresentedRing:
    return PresentedRing([GeneratorSpec(name, 1, 3) for name in "abc"], 6)


@pytest.fixture
def sphere2() -> PresentedRing:
    return PresentedRing([GeneratorSpec("w", 2, 2)], 2)


@pytest.fixture
def bundleOf():
    """Build (spec, model) from a base ring, a rank and the total class given as factors."""
    def _build(base: PresentedRing, rank: int, *factors: str, closedManifold: bool = True):
        value = base.one()
        for factor in factors:
            value = base.mul(value, base.parse(factor))
        spec = BundleSpec(base, base.TopDimension, rank, TotalSwClass(value, rank), closedManifold)
        if rank < 2:
            return spec, None
        return spec, buildProjectiveModel(spec)
    return _build
