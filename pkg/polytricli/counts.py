"""
This module yields the command line entry points to the counting formulas in :mod:`polytri.counting`. The
:class:`CountsCLI` methods are

+--------------------------------+-------------------------------------------------------------------------------+
| Name                           | purpose                                                                       |
+================================+===============================================================================+
| :meth:`.CountsCLI.count`       | Balanced polygon, k corners and r edges per side.                             |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.CountsCLI.triangle`    | The subdivided triangle, optionally split into D- and T-classes.              |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.CountsCLI.partial`     | N points with s sides subdivided once.                                        |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.CountsCLI.general`     | Arbitrary per-side subdivision counts.                                        |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.CountsCLI.isc`         | Indented balanced polygon.                                                    |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.CountsCLI.table`       | The table of balanced counts for k = 2..k_max and r = 1..r_max.               |
+--------------------------------+-------------------------------------------------------------------------------+

"""
import argparse
import logging
from typing import Any, Optional

from polytri.counting import (METHODS, CountRecord, Family, tr_method, triangle_DA, triangle_T, triangle_total)
from polytri.io import CountCache, cached_count, render
from polytri.numeric import Count
from polytri.parallel import run_all
from polytricli.common import Argument, Function, RunConfig

TABLE_LIMIT: int = 12
"""Largest k and r accepted by ``table``."""

component_functions: dict[str, list[Function]] = {
    "counts": [
        Function("count", "Triangulations of the convex k-gon with every side subdivided by r-1 points.", [
            Argument("k", "Number of corners.", int),
            Argument("r", "Edges per side.", int),
            Argument("--method", "Formula to use.", str, "sum2", choices=METHODS),
        ]),
        Function("triangle", "Triangulations of the triangle with a, b and c points inside its sides.", [
            Argument("a", "Points inside BC.", int),
            Argument("b", "Points inside CA.", int),
            Argument("c", "Points inside AB.", int),
            Argument("--breakdown", "Also print the D_A, D_B, D_C and T classes.", bool),
        ]),
        Function("partial", "Triangulations of N points in convex position, s sides subdivided once.", [
            Argument("N", "Total number of points.", int),
            Argument("s", "Number of subdivided sides.", int),
        ]),
        Function("general", "Triangulations of a polygon with the given interior points per side.", [
            Argument("sides", "Interior points of each side, in boundary order.", int, nargs="+"),
        ]),
        Function("isc", "Triangulations of the indented balanced polygon.", [
            Argument("k", "Number of corners.", int),
            Argument("r", "Edges per side.", int),
        ]),
        Function("table", "Table of balanced counts.", [
            Argument("k_max", "Largest number of corners (at most 12).", int),
            Argument("r_max", "Largest number of edges per side (at most 12).", int),
        ]),
    ]
}
"""
Subcommands for the counting formulas. The information is used by argparse to check the command line input against
the expected arguments and to display the help.
"""


def _table_cell(k: int, r: int) -> Count:
    """Module level so that worker processes can import it."""
    return tr_method(k, r, "sum2")


class CountsCLI:
    """
    Class that wraps the counting command line functionality. Every method prints and returns an exit code.

    :ivar RunConfig config: Global options.
    :ivar Optional[CountCache] cache: The count cache, if one was named.
    """
    def __init__(self, config: RunConfig) -> None:
        self.logger: logging.Logger = logging.getLogger("polytricli.counts.CountsCLI")
        self.config: RunConfig = config
        self.cache: Optional[CountCache] = config.open_cache()

    def _emit(self, rows: list[dict[str, Any]]) -> None:
        print(render(rows, self.config.output_format))

    def _record(self, family: Family, params: tuple[int, ...]) -> Count:
        return cached_count(self.cache, family, params, self.config.recheck).count

    def count(self, args: argparse.Namespace) -> int:
        """
        Prints tr(k, r). ``--method auto`` compares two independent formulas before printing anything.

        .. code-block:: bash

           polytri count 3 3
           k  r  count
           3  3     29

        """
        value: Count = tr_method(args.k, args.r, args.method)
        if self.cache is not None:
            self.cache.put(CountRecord(Family.BALANCED, (args.k, args.r), value))
        self._emit([{"k": args.k, "r": args.r, "count": value}])
        return 0

    def triangle(self, args: argparse.Namespace) -> int:
        """Prints the triangle count, with ``--breakdown`` its four classes as well."""
        a, b, c = args.a, args.b, args.c
        total: Count = self._record(Family.TRIANGLE, (a, b, c))

        row: dict[str, Any] = {"a": a, "b": b, "c": c}
        if args.breakdown:
            row.update({
                "D_A": triangle_DA(a, b, c),
                "D_B": triangle_DA(b, c, a),
                "D_C": triangle_DA(c, a, b),
                "T": triangle_T(a, b, c),
            })
            if sum(row[name] for name in ("D_A", "D_B", "D_C", "T")) != triangle_total(a, b, c):
                self.logger.critical("triangle - Classes Do Not Add Up")
                raise AssertionError("Class counts do not add up to the total")
        row["total" if args.breakdown else "count"] = total

        self._emit([row])
        return 0

    def partial(self, args: argparse.Namespace) -> int:
        """Prints the partially subdivided count."""
        self._emit([{"N": args.N, "s": args.s, "count": self._record(Family.PARTIAL, (args.N, args.s))}])
        return 0

    def general(self, args: argparse.Namespace) -> int:
        """Prints the count for arbitrary side subdivisions."""
        sides: tuple[int, ...] = tuple(args.sides)
        self._emit([{"sides": list(sides), "count": self._record(Family.GENERAL, sides)}])
        return 0

    def isc(self, args: argparse.Namespace) -> int:
        """Prints the indented balanced count."""
        self._emit([{"k": args.k, "r": args.r, "count": self._record(Family.ISC, (args.k, args.r))}])
        return 0

    def table(self, args: argparse.Namespace) -> int:
        """
        Prints tr(k, r) for k = 2..k_max and r = 1..r_max. The text format lays the values out with one row per k.

        .. code-block:: bash

           polytri table 3 3
           k\\r  1  2   3
             2  1  1   2
             3  1  4  29

        """
        if not 2 <= args.k_max <= TABLE_LIMIT or not 1 <= args.r_max <= TABLE_LIMIT:
            self.logger.critical("table - Out Of Range")
            raise ValueError("Need 2 <= k_max <= 12 And 1 <= r_max <= 12")

        cells: list[tuple[int, int]] = [(k, r) for k in range(2, args.k_max + 1) for r in range(1, args.r_max + 1)]
        values: list[Count] = run_all(_table_cell, cells, self.config.thread_count)

        if self.cache is not None:
            for (k, r), value in zip(cells, values):
                self.cache.put(CountRecord(Family.BALANCED, (k, r), value))

        if self.config.output_format != "text":
            self._emit([{"k": k, "r": r, "count": v} for (k, r), v in zip(cells, values)])
            return 0

        grid: dict[tuple[int, int], Count] = dict(zip(cells, values))
        rows: list[dict[str, Any]] = [
            {"k\\r": k, **{str(r): grid[(k, r)] for r in range(1, args.r_max + 1)}}
            for k in range(2, args.k_max + 1)
        ]
        self._emit(rows)
        return 0
