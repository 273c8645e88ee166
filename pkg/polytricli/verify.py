"""
This module cross-checks the closed formulas against the brute-force oracle of :mod:`polytri.oracle`. The
:class:`VerifyCLI` methods are

+--------------------------------+-------------------------------------------------------------------------------+
| Name                           | purpose                                                                       |
+================================+===============================================================================+
| :meth:`.VerifyCLI.verify`      | Compares formula and oracle counts over a parameter range, prints every row.  |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.VerifyCLI.render`      | Dumps one legal triangulation of a triangle as JSON.                          |
+--------------------------------+-------------------------------------------------------------------------------+

"""
import argparse
import collections
import itertools
import json
import logging
from typing import Any, Optional

from polytri.counting import (TriangleParams, partial_count, tr_method, triangle_D, triangle_sum, triangle_T,
                              triangle_total)
from polytri.io import render
from polytri.oracle import (FundamentalSet, Layout, TriClass, Triangulation, bijection_forward, bijection_inverse,
                            classify, count_legal, enumerate_fundamental_sets, enumerate_legal, partial_sides,
                            triangle_layout, triangulation_dump)
from polytri.parallel import run_all
from polytricli.common import Argument, Function, RunConfig

# Get the logger
logger: logging.Logger = logging.getLogger("polytricli.verify")

SCOPES: tuple[str, ...] = ("balanced", "triangle", "partial", "bijection", "all")

component_functions: dict[str, list[Function]] = {
    "verify": [
        Function("verify", "Compare the closed formulas with brute-force enumeration.", [
            Argument("--scope", "Which families to check.", str, "all", choices=SCOPES),
            Argument("--max-points", "Largest number of boundary points for balanced and partial checks.", int, 16),
            Argument("--max-sum", "Largest a+b+c for triangle checks.", int, 8),
            Argument("--filter", "Enumerate all convex triangulations and filter instead of pruning.", bool),
        ]),
        Function("render", "Print one legal triangulation of the triangle as JSON.", [
            Argument("a", "Points inside BC.", int),
            Argument("b", "Points inside CA.", int),
            Argument("c", "Points inside AB.", int),
            Argument("--index", "Position of the triangulation in enumeration order.", int, 0),
        ]),
    ]
}
"""Subcommands for verification and inspection."""


def _row(check: str, params: tuple[int, ...], formula: int, oracle: int) -> dict[str, Any]:
    return {
        "check": check,
        "params": list(params),
        "formula": formula,
        "oracle": oracle,
        "status": "ok" if formula == oracle else "FAIL",
    }


def balanced_row(k: int, r: int, mode: str) -> dict[str, Any]:
    """tr(k, r) against the legal triangulations of the balanced polygon."""
    return _row("balanced", (k, r), tr_method(k, r), count_legal([r - 1] * k, mode))


def triangle_row(a: int, b: int, c: int, mode: str) -> dict[str, Any]:
    """The triangle total against the oracle."""
    return _row("triangle", (a, b, c), triangle_total(a, b, c), count_legal([a, b, c], mode))


def partial_rows(N: int, s: int, mode: str) -> list[dict[str, Any]]:
    """
    The partially subdivided count against the oracle, once with the subdivided sides next to each other and once
    spread around the polygon.
    """
    grouped: int = count_legal(partial_sides(N, s), mode)
    spread: int = count_legal(partial_sides(N, s, interleaved=True), mode)
    return [_row("partial", (N, s), partial_count(N, s), grouped), _row("placement", (N, s), grouped, spread)]


def _round_trips(params: TriangleParams, triangulation: Triangulation) -> tuple[Optional[FundamentalSet], bool]:
    """The image of a triangulation and whether the inverse returns it. A map that raises gives no image."""
    try:
        image: FundamentalSet = bijection_forward(triangulation, params)
        return image, bijection_inverse(image, params) == triangulation
    except ValueError as err:
        logger.error(f"_round_trips - {tuple(params)}: {err}")
        return None, False


def _inverts(params: TriangleParams, fundamental: FundamentalSet) -> bool:
    """Whether the forward map undoes the inverse on one fundamental set."""
    try:
        return bijection_forward(bijection_inverse(fundamental, params), params) == fundamental
    except ValueError as err:
        logger.error(f"_inverts - {tuple(params)}: {err}")
        return False


def bijection_rows(a: int, b: int, c: int) -> list[dict[str, Any]]:
    """
    Classifies every legal triangulation of the triangle and runs the bijection both ways. Produces four rows: the
    D-class and T-class totals against their formulas, then the number of triangulations that map and map back, and
    the number of fundamental sets that map back and forth, both against the closed sum over types. A triangulation
    that cannot be classified or mapped counts as a mismatch rather than an error.
    """
    params: TriangleParams = TriangleParams(a, b, c)
    triangulations: list[Triangulation] = list(enumerate_legal(triangle_layout(params)))

    classes: collections.Counter[TriClass] = collections.Counter()
    for triangulation in triangulations:
        try:
            classes[classify(triangulation, params).cls] += 1
        except ValueError as err:
            logger.error(f"bijection_rows - {(a, b, c)}: {err}")
    d_count: int = classes[TriClass.D_A] + classes[TriClass.D_B] + classes[TriClass.D_C]

    fundamental_sets: list[FundamentalSet] = list(enumerate_fundamental_sets(params))
    mapped: list[tuple[Optional[FundamentalSet], bool]] = [_round_trips(params, t) for t in triangulations]

    good: int = sum(1 for _, ok in mapped if ok)
    if {image for image, _ in mapped} != set(fundamental_sets):
        good = -1

    expected: int = triangle_sum(a, b, c)
    return [
        _row("classes-D", (a, b, c), triangle_D(a, b, c), d_count),
        _row("classes-T", (a, b, c), triangle_T(a, b, c), classes[TriClass.T]),
        _row("bijection", (a, b, c), expected, good),
        _row("inverse", (a, b, c), expected, sum(1 for f in fundamental_sets if _inverts(params, f))),
    ]


def _triangles(max_sum: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, c)
        for total in range(1, max_sum + 1)
        for a in range(total + 1)
        for b in range(total - a + 1)
        for c in (total - a - b,)
    ]


class VerifyCLI:
    """
    Class that wraps the verification command line functionality.

    :ivar RunConfig config: Global options.
    """
    def __init__(self, config: RunConfig) -> None:
        self.logger: logging.Logger = logging.getLogger("polytricli.verify.VerifyCLI")
        self.config: RunConfig = config

    def _check_rows(self, args: argparse.Namespace) -> list[dict[str, Any]]:
        mode: str = "filter" if args.filter else "prune"
        scopes: set[str] = set(SCOPES) if args.scope == "all" else {args.scope}
        threads: int = self.config.thread_count
        rows: list[dict[str, Any]] = []

        if "balanced" in scopes:
            cells: list[tuple[int, int, str]] = [
                (k, r, mode) for k in range(3, args.max_points // 2 + 1) for r in range(2, args.max_points // k + 1)
            ]
            rows += run_all(balanced_row, cells, threads)

        if "triangle" in scopes:
            rows += run_all(triangle_row, [(*t, mode) for t in _triangles(args.max_sum)], threads)

        if "partial" in scopes:
            cells = [(N, s, mode) for N in range(4, args.max_points + 1) for s in range(N // 2 + 1)]
            for block in run_all(partial_rows, cells, threads):
                rows += block

        if "bijection" in scopes:
            for block in run_all(bijection_rows, _triangles(args.max_sum), threads):
                rows += block

        return rows

    def verify(self, args: argparse.Namespace) -> int:
        """
        Prints one row per comparison and a final verdict. Returns 1 if any comparison failed.

        .. code-block:: bash

           polytri verify --scope balanced --max-points 8
              check  params  formula  oracle  status
           balanced     3 2        4       4      ok
           balanced     4 2       30      30      ok
           PASS, 2 comparisons

        """
        if args.max_points < 3 or args.max_sum < 1:
            self.logger.critical("verify - Range Too Small")
            raise ValueError("Need --max-points >= 3 And --max-sum >= 1")

        rows: list[dict[str, Any]] = self._check_rows(args)
        failures: int = sum(1 for row in rows if row["status"] != "ok")

        print(render(rows, self.config.output_format, ["check", "params", "formula", "oracle", "status"]))
        if self.config.output_format == "text":
            print(("PASS" if failures == 0 else f"FAIL ({failures} mismatches)") + f", {len(rows)} comparisons")

        if failures:
            self.logger.error(f"verify - {failures} of {len(rows)} comparisons failed")
            return 1
        return 0

    def render(self, args: argparse.Namespace) -> int:
        """
        Prints the triangulation at position ``--index`` of the enumeration of :math:`\\Delta(a,b,c)`.

        :raises ValueError: If the index is out of range.
        """
        params: TriangleParams = TriangleParams(args.a, args.b, args.c)
        layout: Layout = triangle_layout(params)

        chosen: Optional[Triangulation] = None
        if args.index >= 0:
            chosen = next(itertools.islice(enumerate_legal(layout), args.index, None), None)

        if chosen is None:
            self.logger.critical("render - Index Out Of Range")
            raise ValueError("Index Out Of Range")

        print(json.dumps(triangulation_dump(chosen, layout), indent=2))
        return 0
