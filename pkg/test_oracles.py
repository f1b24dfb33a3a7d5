import pytest

from projtc.algebra import GeneratorSpec, PresentedRing
from projtc.baseClass import CheckStatus
from projtc.errors import OracleCapError, SpecError
from projtc.utils import CheckRegistry
from projtc.validate import CheckKeys, exhaustiveKernelDegree1, idealMembershipBruteforce, pascalMod2, relativeHeightBruteforce, runChecks


def testPascal():
    assert [pascalMod2(4, b) for b in range(5)] == [1, 0, 0, 0, 1]
    assert pascalMod2(7, 3) == 1
    assert pascalMod2(64, 32) == 0
    with pytest.raises(OracleCapError):
        pascalMod2(65, 1)
    with pytest.raises(ValueError):
        pascalMod2(3, 4)


def testKernelEnumeration(projectiveSpace, rp2Cubed, bundleOf):
    _, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    assert exhaustiveKernelDegree1(model) == [model.kernelClass]
    _, model = bundleOf(rp2Cubed, 3, "1 + a", "1 + b", "1 + c")
    assert exhaustiveKernelDegree1(model) == [model.kernelClass]


def testKernelEnumerationCap(bundleOf):
    wide = PresentedRing([GeneratorSpec(f"x{i}", 1, 2) for i in range(23)], 1)
    _, model = bundleOf(wide, 2, "1 + x0")
    with pytest.raises(OracleCapError):
        exhaustiveKernelDegree1(model)


def testIdealMembership(torus):
    assert idealMembershipBruteforce(torus, torus.parse("a1*a2"), torus.parse("a1"))
    assert idealMembershipBruteforce(torus, torus.parse("a1*a2"), torus.parse("a1 + a2"))
    assert not idealMembershipBruteforce(torus, torus.parse("a1"), torus.parse("a1*a2"))
    assert not idealMembershipBruteforce(torus, torus.parse("a1"), torus.parse("a2"))
    assert relativeHeightBruteforce(torus, torus.parse("a1 + a2"), torus.parse("a1*a2")) == 1


def testIdealMembershipCap():
    ring = PresentedRing([GeneratorSpec(f"x{i}", 1, 2) for i in range(7)], 3)
    with pytest.raises(OracleCapError):
        idealMembershipBruteforce(ring, ring.parse("x0*x1*x2"), ring.parse("x0"))


def testRegistry():
    for key in CheckKeys:
        assert CheckRegistry.get(key) is not None
    assert "powerVanishing" in CheckRegistry.summary()


def testRunChecks(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 3, "1 + beta")
    results = runChecks(spec, model)
    assert list(results) == list(CheckKeys)
    assert results["relativeHeightOracle"].status == CheckStatus.Skip
    assert all(r.Passed for r in results.values())
    assert results["powerVanishing"].status == CheckStatus.Pass
    with pytest.raises(SpecError):
        runChecks(spec, model, ["noSuchCheck"])


def testChecksOnCircleBundle(torus, bundleOf):
    spec, model = bundleOf(torus, 2, "1 + a1", "1 + a2")
    results = runChecks(spec, model)
    assert results["relativeHeightOracle"].status == CheckStatus.Pass
    assert results["powerVanishing"].status == CheckStatus.Skip
    assert not any(r.status == CheckStatus.Fail for r in results.values())


def testChecksSkipPointFiber(projectiveSpace, bundleOf):
    spec, model = bundleOf(projectiveSpace(2), 1, "1 + beta")
    assert model is None
    results = runChecks(spec, model, ["powerVanishing", "lerayHirsch"])
    assert {r.status for r in results.values()} == {CheckStatus.Skip}
