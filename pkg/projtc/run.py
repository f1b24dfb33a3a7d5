import logging
import pathlib
import time
from dataclasses import replace
from typing import Iterable, Optional, Union

import click
from rich.console import Console
from vlutils.config import summary
from vlutils.logger import configLogging, LoggerBase

from projtc.bounds import circleTcInterval, genusInterval, height, pointFiberInterval, projectiveTcInterval
from projtc.bundle import buildProjectiveModel, dualTotalSw, twistEnhancement
from projtc.config import ParsedSpec, loadSpec
from projtc.consts import Consts
from projtc.errors import InvariantViolation, SpecError
from projtc.report import Report, RingSummary
from projtc.utils import checkArgs
from projtc.utils.registry import CheckRegistry
from projtc.validate.checks import runChecks


__all__ = [
    "run",
    "loadSpecFile",
]


def loadSpecFile(path: pathlib.Path, maxDim: int = Consts.MaxDim) -> ParsedSpec:
    try:
        text = pathlib.Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise SpecError(f"`{path}` is not UTF-8: {e}")
    parsed = loadSpec(text, maxDim)
    if not parsed.bundle.name:
        parsed = replace(parsed, bundle=replace(parsed.bundle, name=pathlib.Path(path).stem))
    return parsed


def run(parsed: ParsedSpec, checks: Optional[Iterable[str]] = None, logger: Union[logging.Logger, LoggerBase] = logging.root) -> Report:
    """Compute the TC interval of one spec.

    Rank 1 is a point fiber. Rank 2 goes through the circle pipeline and rank >= 3
    through the projective one, unless `options.pipeline` says otherwise.

    Args:
        parsed (ParsedSpec): Output of `loadSpec`.
        checks (Iterable[str], optional): Check keys to run. Defaults to `options.checks`.
    """
    start = time.perf_counter()
    spec = parsed.bundle
    base = spec.base
    logger.debug("Spec `%s`: \r\n%s", spec.name, summary(parsed.document.serialize()))
    logger.debug("Summary of %s: \r\n%s", CheckRegistry, CheckRegistry.summary())

    dual = dualTotalSw(base, spec.totalSw)
    model, heights, genus, twist = None, None, None, None
    rings = [RingSummary.of("H*(B)", base)]

    if spec.rank < 2:
        logger.debug("Rank 1, the fiber is a point.")
        interval = pointFiberInterval()
    else:
        model = buildProjectiveModel(spec, logger=logger)
        rings.append(RingSummary.of("H*(E)", model.eRing))
        rings.append(RingSummary.of("H*(E²_B)", model.e2bRing))
        heights = {
            "vL": height(model.e2bRing, model.vL),
            "vR": height(model.e2bRing, model.vR),
            "sum": height(model.e2bRing, model.kernelClass),
        }
        pipeline = parsed.Options.Pipeline
        if pipeline == "auto":
            pipeline = "circle" if spec.rank == 2 else "projective"
        logger.debug("Using the %s pipeline.", pipeline)
        if pipeline == "circle":
            interval = circleTcInterval(spec, logger=logger)
            if spec.W1:
                genus = genusInterval(base, spec.W1, spec.baseDim, spec.closedManifold)
        else:
            interval = projectiveTcInterval(model, spec, logger=logger)
        if parsed.twist is not None:
            twisted = twistEnhancement(model, parsed.twist)
            twist = {
                "height_v": height(model.eRing, model.v),
                "height_v_twisted": height(model.eRing, twisted),
            }

    for bound in interval.candidates:
        logger.debug("%s bound %d from `%s`.", bound.side, bound.value, bound.source)

    results = runChecks(spec, model, parsed.Options.Checks if checks is None else checks, logger=logger)

    report = Report(
        name=spec.name,
        rank=spec.rank,
        baseDim=spec.baseDim,
        totalSw=base.render(spec.totalSw.value),
        dualSw=base.render(dual.value),
        dualSwM=dual.topDegree,
        interval=interval,
        rings=rings,
        heights=heights,
        genus=genus,
        checks=results,
        twist=twist,
        elapsed=time.perf_counter() - start)
    logger.info("`%s`: TC in %s%s.", spec.name, interval, " (exact)" if interval.Exact else "")
    return report


def main(debug: bool, quiet: bool, asJson: bool, maxDim: int, path: pathlib.Path):
    # keep stdout parseable under --json
    loggingLevel = checkArgs(debug, quiet or (asJson and not debug))

    logger = configLogging(None, "root", loggingLevel)

    parsed = loadSpecFile(path, maxDim)
    report = run(parsed, logger=logger)

    if asJson:
        click.echo(report.toJson())
    else:
        report.render(Console())

    failed = report.FailedChecks
    if failed:
        raise InvariantViolation("Failed checks: " + ", ".join(f"{c.name} ({c.detail})" for c in failed))
