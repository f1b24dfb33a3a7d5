import functools
import pathlib

import click
from vlutils.utils import DefaultGroup

import projtc
from projtc.consts import Consts
from projtc.errors import InvariantViolation, ProjtcError


def version(ctx, _, value):
    if not value or ctx.resilient_parsing:
        return
    click.echo(r"""
                     _   _
 _ __  _ __ ___  (_) | |_  ___
| '_ \| '__/ _ \ | | | __|/ __|
| |_) | | | (_) || | | |_| (__
| .__/|_|  \___/_/ |  \__|\___|
|_|            |__/
""" + projtc.__version__)
    ctx.exit()


def exitCodes(fn):
    """0 on success, 1 on parse or semantic errors, 2 when a guaranteed property fails."""
    @functools.wraps(fn)
    def _wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InvariantViolation as e:
            click.echo(f"Invariant violation: {e}", err=True)
            click.get_current_context().exit(2)
        except ProjtcError as e:
            click.echo(f"Error: {e}", err=True)
            click.get_current_context().exit(1)
    return _wrapped


_specPath = click.Path(exists=True, dir_okay=False, resolve_path=True, path_type=pathlib.Path)


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])
@click.group(cls=DefaultGroup, context_settings=CONTEXT_SETTINGS, default='compute')
@click.option("-v", "--version", is_flag=True, callback=version, expose_value=False, is_eager=True, help="Print version info.")
def entryPoint():
    pass


@entryPoint.command(default=True)
@click.option("-D", "--debug", is_flag=True, help="Set logging level to DEBUG to print verbose messages.")
@click.option("-q", "--quiet", is_flag=True, help="Silence all messages, this option has higher priority to `-D/--debug`.")
@click.option("--json", "asJson", is_flag=True, help="Print the flat machine-readable report instead of tables. Implies `-q` unless `-D` is given.")
@click.option("--max-dim", "maxDim", type=click.IntRange(0), default=Consts.MaxDim, show_default=True, help="Reject bundles with dim E²_B = n + 2d above this.")
@click.argument("path", type=_specPath, required=True, nargs=1)
@exitCodes
def compute(debug, quiet, asJson, maxDim, path):
    """Bound the parametrized TC of the projectivized bundle in `path`.

Args:

    path (str): Spec file (yaml) path. Checks listed in `options.checks` run as well.
    """
    from projtc.run import main
    main(debug, quiet, asJson, maxDim, path)


@entryPoint.command()
@click.option("-D", "--debug", is_flag=True, help="Set logging level to DEBUG to print verbose messages.")
@click.option("-q", "--quiet", is_flag=True, help="Silence all messages, this option has higher priority to `-D/--debug`.")
@click.option("--json", "asJson", is_flag=True, help="Print the flat machine-readable report instead of tables. Implies `-q` unless `-D` is given.")
@click.option("--max-dim", "maxDim", type=click.IntRange(0), default=Consts.MaxDim, show_default=True, help="Reject bundles with dim E²_B = n + 2d above this.")
@click.argument("path", type=_specPath, required=True, nargs=1)
@exitCodes
def check(debug, quiet, asJson, maxDim, path):
    """Run every property check on the bundle in `path`. Exits with 2 if any fails.

Args:

    path (str): Spec file (yaml) path.
    """
    from projtc.validate.cli import main
    main(debug, quiet, asJson, maxDim, path)


@entryPoint.command()
@click.option("-D", "--debug", is_flag=True, help="Set logging level to DEBUG to print verbose messages.")
@click.option("-q", "--quiet", is_flag=True, help="Silence all messages, this option has higher priority to `-D/--debug`.")
@click.option("--json", "asJson", is_flag=True, help="Print all flat reports as one JSON document. Implies `-q` unless `-D` is given.")
@click.option("--max-dim", "maxDim", type=click.IntRange(0), default=Consts.MaxDim, show_default=True, help="Reject bundles with dim E²_B = n + 2d above this.")
@click.option("-j", "--jobs", type=int, default=1, show_default=True, help="Parallelized processing jobs.")
@click.argument("directory", type=click.Path(exists=True, file_okay=False, resolve_path=True, path_type=pathlib.Path), required=False, nargs=1)
@exitCodes
def corpus(debug, quiet, asJson, maxDim, jobs, directory):
    """Evaluate every spec in `directory` and compare with its `expected` section. Exits with 2 on any mismatch.

Args:

    directory (optional, str): Folder of spec files. Defaults to the shipped `configs/corpus`.
    """
    from projtc.corpus import main
    main(debug, quiet, asJson, maxDim, jobs, directory)
