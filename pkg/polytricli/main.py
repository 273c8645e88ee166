"""
This module yields the command line entry point :func:`main` of the ``polytri`` command. The subcommands come from
three handler modules

+--------------------------------+-------------------------------------------------------------------------------+
| Module                         | subcommands                                                                   |
+================================+===============================================================================+
| :mod:`polytricli.counts`       | ``count``, ``triangle``, ``partial``, ``general``, ``isc``, ``table``         |
+--------------------------------+-------------------------------------------------------------------------------+
| :mod:`polytricli.verify`       | ``verify``, ``render``                                                        |
+--------------------------------+-------------------------------------------------------------------------------+
| :mod:`polytricli.analysis`     | ``series``, ``asympt``, ``growth``                                            |
+--------------------------------+-------------------------------------------------------------------------------+

A typical usage would be

.. code-block:: bash

   polytri count 3 3 --format json
   [
     {
       "k": "3",
       "r": "3",
       "count": "29"
     }
   ]

The exit code is 0 on success, 1 when a verification or numeric check fails and 2 on invalid input.
"""
import argparse
import logging
import sys
from collections.abc import Callable
from typing import Optional

from polytri.counting import CrossCheckError
from polytri.io import CacheConflictError
from polytricli.analysis import AnalysisCLI
from polytricli.common import Function, RunConfig, parse_arguments, run_config
from polytricli.counts import CountsCLI
from polytricli.verify import VerifyCLI

# Get the logger
logger: logging.Logger = logging.getLogger("polytricli.main")

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2


def _component_functions() -> dict[str, list[Function]]:
    """All subcommands under the single ``polytri`` group."""
    from polytricli import analysis, counts, verify

    functions: list[Function] = []
    for module in (counts, verify, analysis):
        for group in module.component_functions.values():
            functions.extend(group)
    return {"polytri": functions}


def run(argv: Optional[list[str]] = None) -> int:
    """
    Parses the arguments, dispatches to the handler and maps errors onto exit codes.

    :param Optional[list[str]] argv: Arguments to use instead of ``sys.argv[1:]``.
    :rtype: int
    :return: The exit code.
    """
    # Parse the command line arguments with argparse.
    args: argparse.Namespace = parse_arguments(
        "polytri",
        "Exact and asymptotic counts of triangulations of subdivided convex polygons",
        "See the subcommands for a list of functions",
        _component_functions(),
        argv
    )

    try:
        config: RunConfig = run_config(args)

        counts_instance: CountsCLI = CountsCLI(config)
        verify_instance: VerifyCLI = VerifyCLI(config)
        analysis_instance: AnalysisCLI = AnalysisCLI(config)

        # Create a dictionary so that we don't have a massive if-else statement to choose the subcommand handler.
        handlers: dict[str, Callable[[argparse.Namespace], int]] = {
            "count": counts_instance.count,
            "triangle": counts_instance.triangle,
            "partial": counts_instance.partial,
            "general": counts_instance.general,
            "isc": counts_instance.isc,
            "table": counts_instance.table,
            "verify": verify_instance.verify,
            "render": verify_instance.render,
            "series": analysis_instance.series,
            "asympt": analysis_instance.asympt,
            "growth": analysis_instance.growth,
        }

        handler: Optional[Callable[[argparse.Namespace], int]] = handlers.get(config.command, None)

        # Handle the case of an unrecognized command.
        if handler is None:
            raise ValueError("Unknown subcommand " + config.command)

        return handler(args)

    except (CrossCheckError, CacheConflictError, AssertionError) as err:
        logger.critical(f"run - {type(err).__name__}: {err}")
        print(f"polytri: check failed: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except ArithmeticError as err:
        logger.critical(f"run - {type(err).__name__}: {err}")
        print(f"polytri: numeric failure: {err}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValueError, TypeError) as err:
        print(f"polytri: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    """The ``polytri`` console script."""
    sys.exit(run())
