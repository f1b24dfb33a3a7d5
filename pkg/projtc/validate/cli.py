import pathlib

import click
from rich.console import Console
from vlutils.logger import configLogging

from projtc.cli import exitCodes
from projtc.consts import Consts
from projtc.errors import InvariantViolation
from projtc.run import loadSpecFile, run
from projtc.utils import checkArgs
from projtc.validate.checks import CheckKeys


def main(debug: bool, quiet: bool, asJson: bool, maxDim: int, path: pathlib.Path):
    loggingLevel = checkArgs(debug, quiet or (asJson and not debug))

    logger = configLogging(None, "root", loggingLevel)

    parsed = loadSpecFile(path, maxDim)

    report = run(parsed, checks=CheckKeys, logger=logger)

    if asJson:
        click.echo(report.toJson())
    else:
        report.render(Console())

    failed = report.FailedChecks
    if failed:
        raise InvariantViolation("Failed checks: " + ", ".join(f"{c.name} ({c.detail})" for c in failed))
    logger.info("All %d checks passed or skipped.", len(report.checks))


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])
@click.command(context_settings=CONTEXT_SETTINGS)
@click.option("-D", "--debug", is_flag=True, help="Set logging level to DEBUG to print verbose messages.")
@click.option("-q", "--quiet", is_flag=True, help="Silence all messages, this option has higher priority to `-D/--debug`.")
@click.option("--json", "asJson", is_flag=True, help="Print the flat machine-readable report instead of tables.")
@click.option("--max-dim", "maxDim", type=click.IntRange(0), default=Consts.MaxDim, show_default=True, help="Reject bundles with dim E²_B = n + 2d above this.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False, resolve_path=True, path_type=pathlib.Path), required=True, nargs=1)
@exitCodes
def entryPoint(debug, quiet, asJson, maxDim, path):
    """Run every registered property check on the bundle in `path`.

Args:

    path (str): Spec file (yaml) path.
    """
    main(debug, quiet, asJson, maxDim, path)
