import abc
import logging
from dataclasses import dataclass
from typing import Optional, Union

from vlutils.logger import LoggerBase


__all__ = [
    "CheckStatus",
    "CheckResult",
    "Check",
]


class CheckStatus:
    Pass = "pass"
    Fail = "fail"
    Skip = "skip"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def Passed(self) -> bool:
        return self.status != CheckStatus.Fail


class Check(abc.ABC):
    """A property of a bundle model the theory guarantees.

    Subclasses are registered into `CheckRegistry` with `CheckRegistry.register("key")`
    and are called with the spec and its model (None for rank 1).
    """
    def __init__(self, logger: Union[logging.Logger, LoggerBase] = logging.root):
        self._logger = logger

    @property
    def Name(self) -> str:
        name = type(self).__name__
        return name[0].lower() + name[1:]

    def _pass(self, detail: str = "") -> CheckResult:
        return CheckResult(self.Name, CheckStatus.Pass, detail)

    def _fail(self, detail: str) -> CheckResult:
        self._logger.warning("Check `%s` failed: %s", self.Name, detail)
        return CheckResult(self.Name, CheckStatus.Fail, detail)

    def _skip(self, detail: str) -> CheckResult:
        self._logger.debug("Check `%s` skipped: %s", self.Name, detail)
        return CheckResult(self.Name, CheckStatus.Skip, detail)

    def __call__(self, spec: "projtc.bundle.BundleSpec", model: Optional["projtc.bundle.ProjectiveModel"]) -> CheckResult:
        if model is None:
            return self._skip("point fiber")
        return self.check(spec, model)

    @abc.abstractmethod
    def check(self, spec: "projtc.bundle.BundleSpec", model: "projtc.bundle.ProjectiveModel") -> CheckResult:
        raise NotImplementedError
