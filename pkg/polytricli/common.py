"""
Common functions and classes to support command line processing.
"""
import argparse
import logging
import os
from typing import NamedTuple, Optional, Any
from collections.abc import Sequence

from polytri.io import FORMATS, CountCache

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytricli.common")


class Argument(NamedTuple):
    """
    One command line argument of a :class:`Function`. Names starting with ``--`` are options; an option of
    ``type`` bool is a flag with a ``--no-`` form. Everything else is positional.

    >>> from polytricli.common import Argument
    >>> Argument("--method", "Formula to use.", type=str, default="sum2")
    Argument(name='--method', help='Formula to use.', type=<class 'str'>, default='sum2', nargs=None, choices=None)
    """
    name: str
    """Argument name as typed on the command line."""

    help: str
    """Help text shown by ``--help``."""

    type: Optional[type] = None
    """Conversion applied by :mod:`argparse`."""

    default: Any = None
    """Value used when an option is omitted."""

    nargs: Optional[str] = None
    """Passed through to :meth:`argparse.ArgumentParser.add_argument`."""

    choices: Optional[Sequence[Any]] = None
    """Allowed values."""


class Function(NamedTuple):
    """
    A subcommand: its name, help text and arguments. For instance the balanced count is

    >>> from polytricli.common import Argument, Function
    >>> count_cli = Function("count", "Count triangulations.", [Argument("k", "Corners.", int), \
Argument("r", "Edges per side.", int)])

    and would be run as ``polytri count 3 3``.
    """
    name: str
    """The name of the subcommand, the first word after ``polytri``."""

    help: str
    """Help text for the ``--help`` option."""

    args: Optional[list[Argument]] = None
    """Arguments checked by argparse before the handler runs."""


class Component(NamedTuple):
    """
    A group of :class:`Function` s with a shared title and help text. :func:`parse_arguments` turns one component
    into one set of argparse subparsers.
    """
    title: str
    """The title of the grouping."""

    description: str
    """A description of what the grouping does."""

    help: str
    """A help text for the :mod:`argparse` ``--help`` option."""

    functions: list[Function]
    """The subcommands of the grouping."""


GLOBAL_ARGUMENTS: list[Argument] = [
    Argument("--format", "Output format.", str, "text", choices=FORMATS),
    Argument("--cache", "Path of a JSON Lines count cache.", str),
    Argument("--threads", "Worker processes; defaults to the number of CPUs.", int),
    Argument("--recheck", "Evaluate cached counts again and compare them with the cache.", bool),
]
"""Options accepted by every subcommand."""


class RunConfig(NamedTuple):
    """The validated global options of one invocation."""
    command: str
    output_format: str
    cache_path: Optional[str]
    thread_count: int
    recheck: bool = False

    def validate(self) -> None:
        """
        :raises ValueError: If the format is unknown or the thread count is not positive.
        """
        if self.output_format not in FORMATS:
            logger.critical("RunConfig - Unknown Format " + str(self.output_format))
            raise ValueError("Unknown Format " + str(self.output_format))

        if self.thread_count < 1:
            logger.critical("RunConfig - Non Positive Thread Count")
            raise ValueError("Thread Count Must Be Positive")

    def open_cache(self) -> Optional[CountCache]:
        """The cache named by ``--cache``, if any."""
        return CountCache(self.cache_path) if self.cache_path else None


def _add_argument(parser: Any, arg: Argument) -> None:
    """Adds one :class:`Argument` to a subparser."""
    if arg.type is bool:
        parser.add_argument(arg.name, action=argparse.BooleanOptionalAction, default=False, help=arg.help)
        return

    options: dict[str, Any] = {"help": arg.help}
    for key in ("type", "default", "nargs", "choices"):
        value: Any = getattr(arg, key)
        if value is not None:
            options[key] = value

    parser.add_argument(arg.name, **options)


def parse_arguments(
        group: str,
        description: str,
        help: str,
        component_functions: dict[str, list[Function]],
        argv: Optional[list[str]] = None
) -> argparse.Namespace:
    """
    Builds the parser for a command line group and parses the arguments. Every subcommand also receives the
    :data:`GLOBAL_ARGUMENTS`; the chosen subcommand name is stored as ``command``.

    :param str group: The title of the command line grouping.
    :param str description: What the grouping does.
    :param str help: Help text for :mod:`argparse`.
    :param dict[str, list[Function]] component_functions: Maps the group name to its :class:`Function` s.
    :param Optional[list[str]] argv: Arguments to parse instead of ``sys.argv[1:]``.
    :rtype: argparse.Namespace
    :return: Namespace of parsed command line arguments.
    """
    # Get the component functions for the particular group.
    component: Component = Component(
        title=group,
        description=description,
        help=help,
        functions=component_functions[group]
    )

    parser: argparse.ArgumentParser = argparse.ArgumentParser(prog=group, description=component.description)

    subparsers: Any = parser.add_subparsers(
        title=component.title,
        description=component.description,
        help=component.help,
        dest="command",
        required=True
    )

    for func in component.functions:
        func_parser: Any = subparsers.add_parser(func.name, help=func.help)

        for arg in (func.args or []) + GLOBAL_ARGUMENTS:
            _add_argument(func_parser, arg)

    return parser.parse_args(argv)


def run_config(args: argparse.Namespace) -> RunConfig:
    """
    Collects and validates the global options.

    :raises ValueError: If an option is out of range.
    """
    config: RunConfig = RunConfig(
        command=args.command,
        output_format=args.format,
        cache_path=args.cache,
        thread_count=args.threads if args.threads is not None else (os.cpu_count() or 1),
        recheck=args.recheck
    )
    config.validate()
    return config
