import pytest

from projtc.algebra import GeneratorSpec, PresentedRing
from projtc.bounds import (Bound, BoundInterval, Side, Source, binomMod2, binomialPower, checkPowerExpansion, checkPowerVanishing,
                           circleTcInterval, fiberTcInterval, genusInterval, height, heightByExpansion, inIdeal, pointFiberInterval,
                           powerExpansionRhs, projectiveTcInterval, relativeHeight)
from projtc.bundle import BundleSpec, TotalSwClass, buildProjectiveModel
from projtc.consts import Consts
from projtc.errors import InvariantViolation, PresentationError, UnsupportedRankError


def testHeightsOverRp2Cubed(rp2Cubed, bundleOf):
    spec, model = bundleOf(rp2Cubed, 3, "1 + a", "1 + b", "1 + c")
    ring = model.e2bRing
    assert height(ring, model.vL) == 8
    assert height(ring, model.vR) == 8
    assert height(ring, model.kernelClass) == 9
    interval = projectiveTcInterval(model, spec)
    assert (interval.lower, interval.upper) == (9, 9)
    assert interval.Exact


def testHeightsOverSphere(sphere2, bundleOf):
    _, model = bundleOf(sphere2, 2, "1 + w")
    assert height(model.e2bRing, model.vL) == 3
    assert height(model.e2bRing, model.kernelClass) == 1


def testHeight(projectiveSpace, torus):
    rp4 = projectiveSpace(4)
    assert height(rp4, rp4.generator("beta")) == 4
    assert height(rp4, rp4.zero()) == 0
    assert height(torus, torus.parse("a1 + a2")) == 1
    with pytest.raises(PresentationError):
        height(rp4, rp4.one())
    with pytest.raises(PresentationError):
        height(rp4, rp4.parse("beta + beta^2"))


def testInIdeal(projectiveSpace, torus):
    rp2 = projectiveSpace(2)
    assert inIdeal(rp2, rp2.parse("beta^2"), rp2.parse("beta"))
    assert not inIdeal(rp2, rp2.parse("beta"), rp2.parse("beta^2"))
    assert inIdeal(torus, torus.parse("a1*a2"), torus.parse("a1 + a2"))
    assert not inIdeal(torus, torus.parse("a1"), torus.parse("a2"))
    assert inIdeal(torus, torus.zero(), torus.zero())
    assert not inIdeal(torus, torus.one(), torus.zero())


def testRelativeHeight(projectiveSpace, torus):
    for n in range(1, 6):
        ring = projectiveSpace(n)
        assert relativeHeight(ring, ring.generator("beta"), ring.zero()) == n
    assert relativeHeight(torus, torus.parse("a1 + a2"), torus.parse("a1*a2")) == 1
    assert relativeHeight(torus, torus.parse("a1"), torus.one()) == Consts.InIdealAtZero
    assert relativeHeight(torus, torus.zero(), torus.parse("a1*a2")) == 0


def testGenus(projectiveSpace, torus):
    rp2 = projectiveSpace(2)
    genus = genusInterval(rp2, rp2.generator("beta"), 2, False)
    assert genusInterval(rp2, rp2.generator("beta"), 2, True) == genus
    assert (genus.lower, genus.upper, genus.exact) == (2, 2, True)
    closed = genusInterval(torus, torus.parse("a1 + a2"), 2, True)
    assert (closed.lower, closed.upper, closed.exact) == (1, 1, True)
    opened = genusInterval(torus, torus.parse("a1 + a2"), 2, False)
    assert (opened.lower, opened.upper, opened.exact) == (1, 2, False)
    assert genusInterval(torus, torus.zero(), 2, True).exact
    with pytest.raises(PresentationError):
        genusInterval(torus, torus.parse("a1*a2"), 2, True)


@pytest.mark.parametrize("d, lower, upper", [
    (1, 1, 1),
    (2, 3, 3),
    (3, 3, 3),
    (4, 7, 7),
    (5, 6, 7),
    (6, 7, 11),
    (7, 7, 7),
    (8, 15, 15),
    (9, 10, 16),
    (15, 16, 22),
])
def testFiberTc(d, lower, upper):
    interval = fiberTcInterval(d)
    assert (interval.lower, interval.upper) == (lower, upper)
    assert interval.lowerSource is Source.FiberTc


def testFiberTcRejectsPoint():
    with pytest.raises(UnsupportedRankError):
        fiberTcInterval(0)


def testPointFiber():
    interval = pointFiberInterval()
    assert (interval.lower, interval.upper) == (0, 0)
    assert interval.Exact
    assert str(interval) == "[0, 0]"


def testIntervalInvariant():
    with pytest.raises(InvariantViolation):
        BoundInterval(3, 2, Source.KernelHeight, Source.FiberDimension)
    with pytest.raises(InvariantViolation):
        BoundInterval(-1, 2, Source.KernelHeight, Source.FiberDimension)
    assert str(BoundInterval(2, None, Source.KernelHeight, None)) == "[2, ∞]"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def testCircleOverProjectiveSpace(projectiveSpace, bundleOf, n):
    spec, _ = bundleOf(projectiveSpace(n), 2, "1 + beta")
    interval = circleTcInterval(spec)
    assert (interval.lower, interval.upper) == (n + 1, n + 1)
    assert interval.lowerSource is Source.RelativeHeight
    assert interval.upperSource is Source.OrientationGenus


def testCircleOverTorus(torus, bundleOf):
    spec, _ = bundleOf(torus, 2, "1 + a1", "1 + a2")
    interval = circleTcInterval(spec)
    assert (interval.lower, interval.upper) == (2, 2)
    assert interval.upperSource is Source.ClosedManifoldCircle
    spec, _ = bundleOf(torus, 2, "1 + a1", "1 + a2", closedManifold=False)
    interval = circleTcInterval(spec)
    assert (interval.lower, interval.upper) == (2, 3)
    assert interval.upperSource is Source.CircleDimension


def testOrientableCircle(sphere2, bundleOf):
    spec, _ = bundleOf(sphere2, 2, "1 + w")
    interval = circleTcInterval(spec)
    assert (interval.lower, interval.upper) == (1, 1)
    assert interval.lowerSource is interval.upperSource is Source.OrientableExact


def testCircleRejectsOtherRanks(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    with pytest.raises(UnsupportedRankError):
        circleTcInterval(spec)
    circle, circleModel = bundleOf(projectiveSpace(2), 2, "1 + beta")
    with pytest.raises(UnsupportedRankError):
        projectiveTcInterval(circleModel, circle)


def testProjectiveInterval(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    interval = projectiveTcInterval(model, spec)
    assert (interval.lower, interval.upper) == (5, 5)
    assert interval.lowerSource is Source.KernelHeight
    assert interval.upperSource is Source.ClosedManifoldProjective
    assert (interval.lowerSource.Tag, interval.upperSource.Tag) == ("Cor 4.10", "Thm 5.1")
    assert Bound(Source.FiberTc, Side.Lower, 3) in interval.candidates

    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta", closedManifold=False)
    interval = projectiveTcInterval(model, spec)
    assert (interval.lower, interval.upper) == (5, 6)
    assert interval.upperSource is Source.FiberDimension
    assert interval.upperSource.Tag == "Prop 2.4"


def testProjectiveIntervalOverPoint():
    point = PresentedRing([], 0)
    spec = BundleSpec(point, 0, 3, TotalSwClass(point.one(), 3))
    interval = projectiveTcInterval(buildProjectiveModel(spec), spec)
    # ties go to the first listed source
    assert (interval.lower, interval.upper) == (3, 4)
    assert interval.lowerSource is Source.KernelHeight


@pytest.mark.parametrize("d", [3, 7, 15])
def testCircleTimesProjectiveFiber(bundleOf, d):
    circle = PresentedRing([GeneratorSpec("beta", 1, 2)], 1)
    spec, model = bundleOf(circle, d + 1, "1 + beta")
    interval = projectiveTcInterval(model, spec)
    assert (interval.lower, interval.upper) == (2 * d, 2 * d)
    assert checkPowerVanishing(model, spec)


def testBinomMod2():
    assert binomMod2(30, 14) == 1
    assert binomMod2(4, 1) == 0
    assert binomMod2(0, 0) == 1
    assert binomMod2(7, 3) == 1
    with pytest.raises(ValueError):
        binomMod2(3, 4)
    with pytest.raises(ValueError):
        binomMod2(-1, 0)


def testBinomialPower(projectiveSpace, bundleOf):
    _, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    ring = model.e2bRing
    for k in range(7):
        assert binomialPower(ring, model.vL, model.vR, k) == ring.pow(model.kernelClass, k)
    assert heightByExpansion(ring, model.vL, model.vR) == 5


def testPowerExpansion(rp2Cubed, bundleOf):
    spec, model = bundleOf(rp2Cubed, 3, "1 + a", "1 + b", "1 + c")
    assert checkPowerVanishing(model, spec)
    for which in ("L", "R"):
        for i in range(1, spec.baseDim + spec.D + 1):
            assert checkPowerExpansion(model, spec, which, i)
    with pytest.raises(PresentationError):
        checkPowerExpansion(model, spec, "L", 0)
    with pytest.raises(PresentationError):
        checkPowerExpansion(model, spec, "L", spec.baseDim + spec.D + 1)
    with pytest.raises(ValueError):
        powerExpansionRhs(model, spec, "M", 1)


def testPowerExpansionRhs(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    ring = model.e2bRing
    assert powerExpansionRhs(model, spec, "L", 1) == ring.parse("beta*vL^2")
    assert powerExpansionRhs(model, spec, "R", 2) == ring.parse("beta^2*vR^2")
    assert powerExpansionRhs(model, spec, "L", 3) == ring.zero()
