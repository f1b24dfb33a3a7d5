import logging
from typing import Dict, Iterable, List, Optional, Union

from vlutils.logger import LoggerBase

from projtc.baseClass import Check, CheckResult
from projtc.bounds import checkPowerExpansion, checkPowerVanishing, height, heightByExpansion, relativeHeight
from projtc.bundle import BundleSpec, ProjectiveModel, dualTotalSw, lerayHirschRank, swapEnhancements, TotalSwClass
from projtc.errors import OracleCapError, SpecError
from projtc.utils.registry import CheckRegistry
from projtc.validate.oracles import exhaustiveKernelDegree1, relativeHeightBruteforce


__all__ = [
    "PowerVanishing",
    "PowerExpansion",
    "KernelEnumeration",
    "RelativeHeightOracle",
    "DualInversion",
    "SwapSymmetry",
    "LerayHirsch",
    "BinomialHeight",
    "CheckKeys",
    "runChecks",
]


@CheckRegistry.register("powerVanishing")
class PowerVanishing(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        if spec.rank < 3:
            return self._skip("needs rank >= 3")
        if checkPowerVanishing(model, spec):
            return self._pass(f"(vL + vR)^{spec.baseDim + 2 * spec.D} = 0")
        return self._fail(f"(vL + vR)^{spec.baseDim + 2 * spec.D} != 0")


@CheckRegistry.register("powerExpansion")
class PowerExpansion(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        d, n = spec.D, spec.baseDim
        for which in ("L", "R"):
            for i in range(1, n + d + 1):
                if not checkPowerExpansion(model, spec, which, i):
                    return self._fail(f"v{which}^{d + i} disagrees with its dual-class expansion")
        return self._pass(f"{n + d} identities per enhancement, height {model.dual.topDegree + d}")


@CheckRegistry.register("kernelEnumeration")
class KernelEnumeration(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        try:
            kernel = exhaustiveKernelDegree1(model)
        except OracleCapError as e:
            return self._skip(str(e))
        if kernel != [model.kernelClass]:
            return self._fail("degree-1 kernel is {" + ", ".join(model.e2bRing.render(x) for x in kernel) + "}")
        return self._pass(f"kernel is {{{model.e2bRing.render(model.kernelClass)}}}")


@CheckRegistry.register("relativeHeightOracle")
class RelativeHeightOracle(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        if spec.rank != 2:
            return self._skip("needs rank 2")
        try:
            expected = relativeHeightBruteforce(spec.base, spec.W1, spec.W2)
        except OracleCapError as e:
            return self._skip(str(e))
        actual = relativeHeight(spec.base, spec.W1, spec.W2)
        if actual != expected:
            return self._fail(f"elimination gives {actual}, brute force gives {expected}")
        return self._pass(f"relative height {actual}")


@CheckRegistry.register("dualInversion")
class DualInversion(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        base = spec.base
        if base.mul(spec.totalSw.value, model.dual.value) != base.one():
            return self._fail("w * dual(w) != 1")
        # the dual of the dual gives back w in the degrees it lives in
        bound = base.TopDimension
        again = dualTotalSw(base, TotalSwClass(base.sum(model.dual.parts[:bound + 1]), max(bound, spec.rank)))
        for i in range(min(spec.rank, bound) + 1):
            if again.component(i) != base.gradedPart(spec.totalSw.value, i):
                return self._fail(f"dual of the dual differs from w in degree {i}")
        return self._pass(f"m = {model.dual.topDegree}")


@CheckRegistry.register("swapSymmetry")
class SwapSymmetry(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        ring = model.e2bRing
        if height(ring, model.vL) != height(ring, model.vR):
            return self._fail("h(vL) != h(vR)")
        if swapEnhancements(model, model.kernelClass) != model.kernelClass:
            return self._fail("swap moves vL + vR")
        basis = [ring.collect([m]) for m in ring.monomialBasis(1)]
        for x in basis:
            for y in basis:
                if swapEnhancements(model, ring.mul(x, y)) != ring.mul(swapEnhancements(model, x), swapEnhancements(model, y)):
                    return self._fail(f"swap is not multiplicative on {ring.render(x)}, {ring.render(y)}")
        return self._pass()


@CheckRegistry.register("lerayHirsch")
class LerayHirsch(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        for which, ring in (("E", model.eRing), ("E2B", model.e2bRing)):
            for k in range(ring.TopDimension + 1):
                actual, expected = len(ring.monomialBasis(k)), lerayHirschRank(model, k, which)
                if actual != expected:
                    return self._fail(f"dim H^{k}({which}) = {actual}, Leray-Hirsch predicts {expected}")
        return self._pass()


@CheckRegistry.register("binomialHeight")
class BinomialHeight(Check):
    def check(self, spec: BundleSpec, model: ProjectiveModel) -> CheckResult:
        ring = model.e2bRing
        direct, expanded = height(ring, model.kernelClass), heightByExpansion(ring, model.vL, model.vR)
        if direct != expanded:
            return self._fail(f"direct height {direct}, binomial expansion gives {expanded}")
        return self._pass(f"height {direct}")


CheckKeys = ("powerVanishing", "powerExpansion", "kernelEnumeration", "relativeHeightOracle", "dualInversion", "swapSymmetry", "lerayHirsch", "binomialHeight")


def runChecks(spec: BundleSpec, model: Optional[ProjectiveModel], names: Optional[Iterable[str]] = None, logger: Union[logging.Logger, LoggerBase] = logging.root) -> Dict[str, CheckResult]:
    """Run registered checks by key, all of them when `names` is None.

    Raises:
        SpecError: On an unknown check key.
    """
    keys: List[str] = list(CheckKeys if names is None else names)
    results = dict()
    for key in keys:
        if key not in CheckKeys:
            raise SpecError(f"Unknown check `{key}`. Available: {', '.join(CheckKeys)}.")
        result = CheckRegistry.get(key)(logger)(spec, model)
        logger.debug("Check `%s`: %s %s", result.name, result.status, result.detail)
        results[result.name] = result
    return results
