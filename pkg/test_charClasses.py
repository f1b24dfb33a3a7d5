import pytest

from projtc.bundle import TotalSwClass, dualTotalSw, qPoly
from projtc.errors import InvalidClassError, PresentationError


def testDualOfProduct(rp2Cubed, bundleOf):
    spec, _ = bundleOf(rp2Cubed, 3, "1 + a", "1 + b", "1 + c")
    dual = dualTotalSw(rp2Cubed, spec.totalSw)
    assert dual.topDegree == 6
    assert dual.component(6) == rp2Cubed.parse("a^2*b^2*c^2")
    assert rp2Cubed.mul(spec.totalSw.value, dual.value) == rp2Cubed.one()


def testDualOfTrivialClass(projectiveSpace):
    rp3 = projectiveSpace(3)
    dual = dualTotalSw(rp3, TotalSwClass(rp3.one(), 2))
    assert dual.topDegree == 0
    assert dual.value == rp3.one()


@pytest.mark.parametrize("n", [1, 2, 5])
def testDualIsGeometricSeries(projectiveSpace, n):
    ring = projectiveSpace(n)
    dual = dualTotalSw(ring, TotalSwClass(ring.parse("1 + beta"), 2))
    assert dual.topDegree == n
    assert dual.value == ring.sum(ring.pow(ring.generator("beta"), i) for i in range(n + 1))
    assert dual.component(n + 1) == ring.zero()
    assert dual.component(-1) == ring.zero()


def testValidate(projectiveSpace):
    rp3 = projectiveSpace(3)
    with pytest.raises(InvalidClassError, match="must start with 1"):
        TotalSwClass(rp3.parse("beta"), 2).validate(rp3)
    with pytest.raises(InvalidClassError, match="Class exceeds rank bound"):
        TotalSwClass(rp3.parse("1 + beta^3"), 2).validate(rp3)
    with pytest.raises(InvalidClassError):
        dualTotalSw(rp3, TotalSwClass(rp3.parse("1 + beta^3"), 2))


def testComponents(torus):
    w = TotalSwClass(torus.parse("1 + a1 + a2 + a1*a2"), 2)
    assert w.components(torus) == [torus.one(), torus.parse("a1 + a2"), torus.parse("a1*a2")]


def testQPolynomials(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    ring = model.e2bRing
    assert qPoly(spec.totalSw, 0, model.vL, ring) == ring.one()
    assert qPoly(spec.totalSw, 1, model.vL, ring) == ring.parse("vL + beta")
    assert qPoly(spec.totalSw, 2, model.vR, ring) == ring.parse("vR^2 + beta*vR")
    # Q_{d+1}(x) is the defining relation
    assert qPoly(spec.totalSw, 3, model.vL, ring) == ring.zero()
    with pytest.raises(InvalidClassError):
        qPoly(spec.totalSw, 4, model.vL, ring)
    with pytest.raises(InvalidClassError):
        qPoly(spec.totalSw, -1, model.vL, ring)
    with pytest.raises(InvalidClassError):
        qPoly(spec.totalSw, 1, ring.parse("vL^2"), ring)
    with pytest.raises(PresentationError):
        qPoly(spec.totalSw, 1, ring.parse("vL + vL*vR"), ring)
    assert qPoly(spec.totalSw, 2, ring.zero(), ring) == ring.zero()
