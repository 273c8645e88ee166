"""
Command line entry points to the generating functions of :mod:`polytri.series` and the asymptotic formulas of
:mod:`polytri.asymptotics`.

+--------------------------------+-------------------------------------------------------------------------------+
| Name                           | purpose                                                                       |
+================================+===============================================================================+
| :meth:`.AnalysisCLI.series`    | Exact series coefficients and numeric generating function residuals.          |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.AnalysisCLI.asympt`    | An asymptotic estimate next to the exact count.                               |
+--------------------------------+-------------------------------------------------------------------------------+
| :meth:`.AnalysisCLI.growth`    | Growth factors on a grid, for plotting, plus their minimizers.                |
+--------------------------------+-------------------------------------------------------------------------------+

"""
import argparse
import logging
from typing import Any, Optional

from polytri.asymptotics import (AsymptoticEstimate, GrowthPoint, asympt_k_to_inf, asympt_partial, asympt_r_to_inf,
                                 growth_argmin_integer, growth_argmin_real, growth_factor, growth_table, ratio)
from polytri.counting import partial_count, tr_method
from polytri.io import render
from polytri.numeric import Count
from polytri.series import (GUARD, SeriesWindow, convergence_radius, gf_check, horizontal_series, vertical_series,
                            van_hoeij_window)
from polytricli.common import Argument, Function, RunConfig

SERIES_FAMILIES: tuple[str, ...] = ("vertical", "horizontal", "van-hoeij")

REGIMES: tuple[str, ...] = ("r-inf", "k-inf", "partial")

GF_TOLERANCE: float = 1e-8
"""Largest accepted difference between a generating function and its truncated series."""

EXACT_LIMIT: int = 4000
"""Exact counts are printed only up to this many boundary points."""

component_functions: dict[str, list[Function]] = {
    "analysis": [
        Function("series", "Generating function coefficients and residuals.", [
            Argument("family", "Which generating function.", str, choices=SERIES_FAMILIES),
            Argument("param", "r for vertical, k for horizontal; ignored for van-hoeij.", int, 2, nargs="?"),
            Argument("--order", "Truncation order.", int, 20),
            Argument("--x", "Evaluation point; defaults to half the guarded radius.", float),
        ]),
        Function("asympt", "Asymptotic estimate against the exact count.", [
            Argument("regime", "Which limit.", str, choices=REGIMES),
            Argument("--k", "Number of corners.", int, 3),
            Argument("--r", "Edges per side.", int, 2),
            Argument("--n", "Total number of points, partial regime.", int, 100),
            Argument("--alpha", "Fraction of subdivided sides, partial regime.", float, 0.25),
        ]),
        Function("growth", "Growth factor of the indented configuration over a grid of string lengths.", [
            Argument("--min", "Smallest r.", float, 1.0),
            Argument("--max", "Largest r.", float, 6.0),
            Argument("--step", "Grid step.", float, 0.01),
        ]),
    ]
}
"""Subcommands for the analytic side."""


class AnalysisCLI:
    """
    Class that wraps the series and asymptotics command line functionality.

    :ivar RunConfig config: Global options.
    """
    def __init__(self, config: RunConfig) -> None:
        self.logger: logging.Logger = logging.getLogger("polytricli.analysis.AnalysisCLI")
        self.config: RunConfig = config

    def _emit(self, rows: list[dict[str, Any]], columns: Optional[list[str]] = None) -> None:
        print(render(rows, self.config.output_format, columns))

    @staticmethod
    def _exact_coefficients(window: SeriesWindow) -> list[Any]:
        return [int(c) if c.denominator == 1 else str(c) for c in window.coeffs[1:]]

    def _van_hoeij(self, order: int) -> int:
        coeffs = van_hoeij_window(order).coeffs
        rows: list[dict[str, Any]] = []
        for r in range(2, order + 1):
            expected: Count = tr_method(3, r - 1)
            rows.append({"r": r, "coefficient": int(coeffs[r]), "expected": expected, "match": coeffs[r] == expected})

        self._emit(rows)
        return 0 if all(row["match"] for row in rows) else 1

    def series(self, args: argparse.Namespace) -> int:
        """
        For van-hoeij, prints the coefficient of :math:`x^r` next to tr(3, r-1). For the vertical and horizontal
        families, prints the root based value, the truncated exact sum, their difference and the exact coefficients
        from degree one up to the order. Returns 1 on a mismatch.

        .. code-block:: bash

           polytri series van-hoeij --order 4
           r  coefficient  expected  match
           2            1         1   true
           3            4         4   true
           4           29        29   true

        """
        if args.family == "van-hoeij":
            return self._van_hoeij(args.order)

        x: float = args.x if args.x is not None else GUARD * convergence_radius(args.family, args.param) / 2
        value, truncated, diff = gf_check(args.family, args.param, x, args.order)
        exact_series = vertical_series if args.family == "vertical" else horizontal_series
        window: SeriesWindow = exact_series(args.param, args.order)

        self._emit([{
            "family": args.family,
            "param": args.param,
            "x": f"{x:.6e}",
            "value": f"{value.real:.12e}",
            "truncated": f"{truncated.real:.12e}",
            "diff": f"{diff:.3e}",
            "coefficients": self._exact_coefficients(window),
        }])

        if diff > GF_TOLERANCE:
            self.logger.error(f"series - difference {diff:.3e} above tolerance")
            return 1
        return 0

    def asympt(self, args: argparse.Namespace) -> int:
        """
        Prints the estimate, the exact count and their ratio. The exact count is left out once the configuration has
        more than :data:`EXACT_LIMIT` points.
        """
        exact: Optional[Count] = None
        if args.regime == "partial":
            s: int = round(args.alpha * args.n)
            estimate: AsymptoticEstimate = asympt_partial(args.n, s / args.n)
            params: dict[str, Any] = {"N": args.n, "s": s}
            if args.n <= EXACT_LIMIT:
                exact = partial_count(args.n, s)
        else:
            estimator = asympt_r_to_inf if args.regime == "r-inf" else asympt_k_to_inf
            estimate = estimator(args.k, args.r)
            params = {"k": args.k, "r": args.r}
            if args.k * args.r <= EXACT_LIMIT:
                exact = tr_method(args.k, args.r)

        row: dict[str, Any] = {
            "regime": args.regime,
            **params,
            "log_estimate": estimate.log_value,
            "exact": exact if exact is not None else "",
            "ratio": ratio(exact, estimate) if exact is not None else "",
        }
        self._emit([row])
        return 0

    def growth(self, args: argparse.Namespace) -> int:
        """
        Prints one ``grid`` row per grid point, then the integer and the real minimizer as rows of their own, so that
        every output format carries them.

        .. code-block:: bash

           polytri growth --min 1 --max 3 --step 1
                    point         r         g
                     grid  1.000000  4.000000
                     grid  2.000000  3.464102
                     grid  3.000000  4.000000
           integer-argmin  2.000000  3.464102
              real-argmin  1.495...  3.30...

        """
        points: list[GrowthPoint] = growth_table(args.min, args.max, args.step)
        rows: list[dict[str, Any]] = [{"point": "grid", "r": p.r, "g": p.g} for p in points]

        for label, r in (
            ("integer-argmin", growth_argmin_integer(max(1, int(args.max)))),
            ("real-argmin", growth_argmin_real()),
        ):
            best: GrowthPoint = growth_factor(r)
            rows.append({"point": label, "r": best.r, "g": best.g})

        self._emit(rows)
        return 0
