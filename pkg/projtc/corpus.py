"""Evaluate every shipped worked example and compare against its `expected` section."""
import json
import logging
import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

import click
from joblib import Parallel, delayed
from rich.console import Console
from rich.table import Table
from vlutils.logger import configLogging, LoggerBase

from projtc.consts import Consts
from projtc.errors import InvariantViolation, ProjtcError
from projtc.run import loadSpecFile, run
from projtc.utils import checkArgs, getRichProgress


__all__ = [
    "CorpusEntry",
    "defaultCorpusDir",
    "evaluateFile",
    "evaluateCorpus",
]


def defaultCorpusDir() -> pathlib.Path:
    return pathlib.Path(__file__).resolve().parent.parent.joinpath("configs", "corpus")


@dataclass
class CorpusEntry:
    name: str
    path: str
    flat: Dict[str, Any] = field(default_factory=dict)
    # key -> (expected, actual)
    mismatches: Dict[str, Tuple[Any, Any]] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def Ok(self) -> bool:
        return self.error is None and not self.mismatches

    @property
    def Status(self) -> str:
        if self.error is not None:
            return "error"
        return "ok" if not self.mismatches else "mismatch"


def evaluateFile(path: pathlib.Path, maxDim: int = Consts.MaxDim) -> CorpusEntry:
    """Run one spec. Errors are captured in the entry so one bad file does not stop the corpus."""
    try:
        parsed = loadSpecFile(path, maxDim)
        report = run(parsed, logger=logging.getLogger(f"{Consts.Name}.corpus"))
    except ProjtcError as e:
        return CorpusEntry(pathlib.Path(path).stem, str(path), error=f"{type(e).__name__}: {e}")
    flat = report.flat()
    mismatches = dict()
    expected = parsed.document.Expected
    if expected is not None:
        for key, value in expected.flat().items():
            if flat.get(key) != value:
                mismatches[key] = (value, flat.get(key))
    for key, value in flat.items():
        if key.startswith("checks.") and value == "fail":
            mismatches[key] = ("pass", value)
    return CorpusEntry(report.name, str(path), flat, mismatches)


def evaluateCorpus(directory: pathlib.Path, jobs: int = 1, maxDim: int = Consts.MaxDim, disable: bool = False, logger: Union[logging.Logger, LoggerBase] = logging.root) -> List[CorpusEntry]:
    files = sorted(pathlib.Path(directory).glob("*.yaml"))
    if len(files) < 1:
        raise ProjtcError(f"No `*.yaml` spec found in `{directory}`.")
    logger.debug("Found %d specs in `%s`.", len(files), directory)

    total = len(files)
    progress = getRichProgress(disable)
    entries = list()
    with progress:
        task = progress.add_task("[ Corpus ]", total=total, progress=f"{0:4d}/{total:4d}", suffix="")
        for now, entry in enumerate(Parallel(jobs, return_as="generator")(delayed(evaluateFile)(f, maxDim) for f in files)):
            entries.append(entry)
            progress.update(task, advance=1, progress=f"{(now + 1):4d}/{total:4d}", suffix=entry.name)
        progress.remove_task(task)
    return entries


def _render(entries: List[CorpusEntry], console: Console):
    table = Table(title="Corpus", title_justify="left")
    for column in ("spec", "interval", "sources", "status", "detail"):
        table.add_column(column)
    for entry in entries:
        if entry.error is not None:
            table.add_row(entry.name, "", "", "[bold red]error[/]", entry.error)
            continue
        interval = f"[{entry.flat['lower']}, {entry.flat['upper']}]"
        sources = f"{entry.flat['lower_source']} / {entry.flat['upper_source']}"
        detail = "; ".join(f"{key}: expected {e}, got {a}" for key, (e, a) in entry.mismatches.items())
        status = "[green]ok[/]" if entry.Ok else "[bold red]mismatch[/]"
        table.add_row(entry.name, interval, sources, status, detail)
    console.print(table)


def main(debug: bool, quiet: bool, asJson: bool, maxDim: int, jobs: int, directory: Optional[pathlib.Path]):
    loggingLevel = checkArgs(debug, quiet or (asJson and not debug))

    logger = configLogging(None, "root", loggingLevel)

    directory = defaultCorpusDir() if directory is None else directory

    entries = evaluateCorpus(directory, jobs, maxDim, disable=quiet or asJson, logger=logger)

    if asJson:
        click.echo(json.dumps({e.name: {"status": e.Status, "report": e.flat, "error": e.error} for e in entries}, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        _render(entries, Console())

    errors = [e for e in entries if e.error is not None]
    if errors:
        raise ProjtcError(f"{len(errors)} spec(s) failed to evaluate: " + ", ".join(e.name for e in errors))
    mismatched = [e for e in entries if e.mismatches]
    if mismatched:
        raise InvariantViolation(f"{len(mismatched)} spec(s) disagree with their expected values: " + ", ".join(e.name for e in mismatched))
    logger.info("All %d corpus specs match.", len(entries))
