import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console
from rich.table import Table

from projtc.algebra import PresentedRing
from projtc.baseClass import CheckResult, CheckStatus
from projtc.bounds import BoundInterval, GenusInterval


__all__ = [
    "RingSummary",
    "Report",
]


@dataclass(frozen=True)
class RingSummary:
    label: str
    # (name, degree, power, rhs)
    generators: Tuple[Tuple[str, int, int, str], ...]
    betti: Tuple[int, ...]

    @staticmethod
    def of(label: str, ring: PresentedRing) -> "RingSummary":
        rows = tuple((g.name, g.degree, g.power, ring.render(g.rhs.padded(ring.NumGenerators))) for g in ring.Generators)
        return RingSummary(label, rows, tuple(ring.bettiNumbers()))


@dataclass
class Report:
    """Everything `run` found for one spec. Every number comes from one engine call."""
    name: str
    rank: int
    baseDim: int
    totalSw: str
    dualSw: str
    dualSwM: int
    interval: BoundInterval
    rings: List[RingSummary] = field(default_factory=list)
    heights: Optional[Dict[str, int]] = None
    genus: Optional[GenusInterval] = None
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    twist: Optional[Dict[str, int]] = None
    elapsed: float = 0.0

    @property
    def Exact(self) -> bool:
        return self.interval.Exact

    @property
    def FailedChecks(self) -> List[CheckResult]:
        return [c for c in self.checks.values() if c.status == CheckStatus.Fail]

    def flat(self) -> Dict[str, Any]:
        """Machine-readable key-value form. Timing is left out so reports are reproducible."""
        result = {
            "lower": self.interval.lower,
            "upper": self.interval.upper,
            "exact": self.interval.Exact,
            "lower_source": self.interval.lowerSource.Tag,
            "upper_source": None if self.interval.upperSource is None else self.interval.upperSource.Tag,
            "lower_rule": str(self.interval.lowerSource),
            "upper_rule": None if self.interval.upperSource is None else str(self.interval.upperSource),
            "dual_sw.m": self.dualSwM,
            "rank": self.rank,
            "base_dim": self.baseDim,
        }
        if self.heights is not None:
            result.update({
                "heights.v_l": self.heights["vL"],
                "heights.v_r": self.heights["vR"],
                "heights.sum": self.heights["sum"],
            })
        if self.genus is not None:
            result.update({"genus.lower": self.genus.lower, "genus.upper": self.genus.upper})
        for key, check in self.checks.items():
            result[f"checks.{key}"] = check.status
        if self.twist is not None:
            result.update({f"twist.{key}": value for key, value in self.twist.items()})
        return result

    def toJson(self) -> str:
        return json.dumps(self.flat(), sort_keys=True, indent=2, ensure_ascii=False)

    def render(self, console: Console):
        title = f"TC interval {self.interval}" + (" (exact)" if self.Exact else "")
        console.rule(f"[b]{self.name or 'bundle'}[/] rank {self.rank} over a base of dim {self.baseDim}")

        for ring in self.rings:
            table = Table(title=f"{ring.label}: Betti numbers {list(ring.betti)}", title_justify="left")
            for column in ("generator", "degree", "power", "rhs"):
                table.add_column(column)
            for name, degree, power, rhs in ring.generators:
                table.add_row(name, str(degree), str(power), rhs)
            console.print(table)

        console.print(f"w  = {self.totalSw}")
        console.print(f"w̄  = {self.dualSw}  (m = {self.dualSwM})")
        if self.heights is not None:
            console.print(f"h(vL) = {self.heights['vL']}, h(vR) = {self.heights['vR']}, h(vL + vR) = {self.heights['sum']}")
        if self.genus is not None:
            console.print(f"genus(w_1) in [{self.genus.lower}, {self.genus.upper}]" + (" (exact)" if self.genus.exact else ""))

        bounds = Table(title=title, title_justify="left")
        for column in ("side", "source", "rule", "value", ""):
            bounds.add_column(column)
        for bound in self.interval.candidates:
            winner = self.interval.lowerSource if str(bound.side) == "lower" else self.interval.upperSource
            chosen = bound.source is winner and bound.value == (self.interval.lower if str(bound.side) == "lower" else self.interval.upper)
            bounds.add_row(str(bound.side), bound.source.Tag, str(bound.source), str(bound.value), "*" if chosen else "")
        console.print(bounds)

        if self.checks:
            checks = Table(title="Checks", title_justify="left")
            for column in ("check", "status", "detail"):
                checks.add_column(column)
            for key, check in self.checks.items():
                style = {CheckStatus.Pass: "green", CheckStatus.Fail: "bold red", CheckStatus.Skip: "yellow"}[check.status]
                checks.add_row(key, f"[{style}]{check.status}[/]", check.detail)
            console.print(checks)

        if self.twist is not None:
            console.print(f"h(v) = {self.twist['height_v']}, h(v + w_1(L)) = {self.twist['height_v_twisted']}")
        console.print(f"Finished in {self.elapsed:.3f}s.")
