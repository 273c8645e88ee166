"""
The unit test module for :mod:`polytricli.main` . The subcommands are run in process through
:func:`polytricli.main.run` and standard output is captured through capsys. Worker counts are pinned to one so that
monkeypatched functions stay visible to the handlers.
"""
import csv
import io
import json
import sys
from unittest.mock import patch

import pytest

from polytri.oracle import Triangulation
from polytricli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main, run


def _run_json(capsys, argv: list[str]) -> list[dict]:
    assert run(argv + ["--format", "json", "--threads", "1"]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def _run_csv(capsys, argv: list[str]) -> list[dict]:
    assert run(argv + ["--format", "csv", "--threads", "1"]) == EXIT_OK
    return list(csv.DictReader(io.StringIO(capsys.readouterr().out)))


class DataCounts:
    """
    Test data for the counting subcommands. Each entry is the argument list and the expected JSON rows.
    """
    counts__expected = [
        (["count", "3", "3"], [{"k": "3", "r": "3", "count": "29"}]),
        (["count", "4", "2", "--method", "auto"], [{"k": "4", "r": "2", "count": "30"}]),
        (["count", "2", "1"], [{"k": "2", "r": "1", "count": "1"}]),
        (["triangle", "1", "1", "1"], [{"a": "1", "b": "1", "c": "1", "count": "4"}]),
        (
            ["triangle", "2", "1", "1", "--breakdown"],
            [{"a": "2", "b": "1", "c": "1", "D_A": "3", "D_B": "1", "D_C": "1", "T": "2", "total": "7"}]
        ),
        (
            ["triangle", "2", "2", "2", "--breakdown"],
            [{"a": "2", "b": "2", "c": "2", "D_A": "5", "D_B": "5", "D_C": "5", "T": "14", "total": "29"}]
        ),
        (["partial", "8", "4"], [{"N": "8", "s": "4", "count": "30"}]),
        (["general", "1", "1", "1", "1"], [{"sides": ["1", "1", "1", "1"], "count": "30"}]),
        (["isc", "4", "3"], [{"k": "4", "r": "3", "count": "9664"}]),
    ]
    """
    The test cases are as follows

    +--------------------------------------+----------------------------------------------------------------------+
    | description                          | reason                                                               |
    +======================================+======================================================================+
    | count                                | The default formula, the cross checked route and the digon.          |
    +--------------------------------------+----------------------------------------------------------------------+
    | triangle                             | The hexagon-shaped triangle and two class breakdowns.                |
    +--------------------------------------+----------------------------------------------------------------------+
    | partial, general                     | Both reduce to the quadrilateral with one point per side.            |
    +--------------------------------------+----------------------------------------------------------------------+
    | isc                                  | :math:`604 \\cdot C_2^4`.                                            |
    +--------------------------------------+----------------------------------------------------------------------+

    """

    usage__unexpected = [
        (["count", "1", "3"], "Need k >= 2 And r >= 1"),
        (["table", "13", "2"], "Need 2 <= k_max <= 12 And 1 <= r_max <= 12"),
        (["general", "1", "1"], "Need At Least 3 Sides"),
        (["partial", "8", "5"], "Need 0 <= s <= N/2"),
        (["verify", "--max-points", "2"], "Need --max-points >= 3 And --max-sum >= 1"),
        (["render", "2", "2", "2", "--index", "29"], "Index Out Of Range"),
        (["series", "horizontal", "3", "--x", "0.5"], "Outside Convergence Guard"),
        (["asympt", "partial", "--alpha", "0.75"], "Need 0 <= alpha <= 1/2"),
        (["count", "3", "3", "--threads", "0"], "Thread Count Must Be Positive"),
    ]
    """Invalid input, which exits with status 2 and the message on standard error."""


class TestCounts:
    """
    Test class for :class:`polytricli.counts.CountsCLI` .
    """
    @pytest.mark.parametrize(
        "argv,expected",
        DataCounts.counts__expected,
        ids=[str(v) for v in range(len(DataCounts.counts__expected))]
    )
    def test_counts__expected(self, capsys, argv, expected):
        """
        Test the counting subcommands against :attr:`DataCounts.counts__expected` .
        """
        assert _run_json(capsys, argv) == expected

    def test_count_text(self, capsys):
        """
        The text format is a right justified table.
        """
        assert run(["count", "3", "3"]) == EXIT_OK
        assert capsys.readouterr().out == "k  r  count\n3  3     29\n"

    def test_table(self, capsys, table_1):
        """
        The long form of the table reproduces the reference values.
        """
        rows = _run_csv(capsys, ["table", "7", "6"])

        assert len(rows) == 36
        for row in rows:
            assert int(row["count"]) == table_1[int(row["k"])][int(row["r"]) - 1]

    def test_table_text(self, capsys):
        """
        The text form has one row per k.
        """
        assert run(["table", "3", "3", "--threads", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()

        assert [line.split() for line in lines] == [
            ["k\\r", "1", "2", "3"], ["2", "1", "1", "2"], ["3", "1", "4", "29"]
        ]

    def test_table_workers(self, capsys):
        """
        The worker count does not change the output.
        """
        serial = _run_json(capsys, ["table", "5", "4"])

        assert run(["table", "5", "4", "--format", "json", "--threads", "2"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == serial

    def test_cache(self, capsys, tmp_path):
        """
        Counts are appended to the cache once, and a conflicting cache aborts with status 1.
        """
        path = tmp_path / "counts.jsonl"

        _run_json(capsys, ["count", "3", "3", "--cache", str(path)])
        _run_json(capsys, ["count", "3", "3", "--cache", str(path)])
        assert len(path.read_text(encoding="utf-8").splitlines()) == 1

        path.write_text('{"family": "balanced", "params": [3, 3], "count": "28"}\n', encoding="utf-8")
        assert run(["count", "3", "3", "--cache", str(path)]) == EXIT_FAILURE
        assert "check failed" in capsys.readouterr().err

    def test_cached_value_is_used(self, capsys, tmp_path):
        """
        Cached values are printed as stored for the cached families.
        """
        path = tmp_path / "counts.jsonl"
        path.write_text('{"family": "partial", "params": [8, 4], "count": "31"}\n', encoding="utf-8")

        assert _run_json(capsys, ["partial", "8", "4", "--cache", str(path)])[0]["count"] == "31"

    def test_recheck(self, capsys, tmp_path):
        """
        With ``--recheck`` a wrong cached value is found and aborts with status 1, a correct one passes.
        """
        path = tmp_path / "counts.jsonl"
        path.write_text('{"family": "partial", "params": [8, 4], "count": "31"}\n', encoding="utf-8")

        assert run(["partial", "8", "4", "--cache", str(path), "--recheck", "--threads", "1"]) == EXIT_FAILURE
        assert "Conflicting counts for partial" in capsys.readouterr().err

        path.write_text('{"family": "partial", "params": [8, 4], "count": "30"}\n', encoding="utf-8")
        assert _run_json(capsys, ["partial", "8", "4", "--cache", str(path), "--recheck"])[0]["count"] == "30"


class TestVerify:
    """
    Test class for :class:`polytricli.verify.VerifyCLI` .
    """
    def test_verify_balanced(self, capsys):
        """
        Seven balanced polygons have at most twelve points with k >= 3 and r >= 2.
        """
        assert run(["verify", "--scope", "balanced", "--max-points", "12", "--threads", "1"]) == EXIT_OK

        assert capsys.readouterr().out.splitlines()[-1] == "PASS, 7 comparisons"

    @pytest.mark.parametrize(
        "scope",
        ["triangle", "partial", "bijection"],
        ids=[str(v) for v in range(3)]
    )
    def test_verify_scopes(self, capsys, scope):
        """
        Every row of the smaller scopes matches.
        """
        rows = _run_json(capsys, ["verify", "--scope", scope, "--max-points", "9", "--max-sum", "4"])

        assert rows
        assert all(row["status"] == "ok" for row in rows)

    def test_verify_filter(self, capsys):
        """
        The filtering oracle agrees as well.
        """
        rows = _run_json(capsys, ["verify", "--scope", "balanced", "--max-points", "9", "--filter"])

        assert [row["params"] for row in rows] == [["3", "2"], ["3", "3"], ["4", "2"]]
        assert all(row["status"] == "ok" for row in rows)

    def test_verify_failure(self, capsys, monkeypatch):
        """
        A wrong formula is reported row by row and gives status 1.
        """
        monkeypatch.setattr("polytricli.verify.tr_method", lambda k, r: 0)

        assert run(["verify", "--scope", "balanced", "--max-points", "8", "--threads", "1"]) == EXIT_FAILURE
        assert capsys.readouterr().out.splitlines()[-1] == "FAIL (2 mismatches), 2 comparisons"

    def test_verify_classification_failure(self, capsys, monkeypatch):
        """
        A triangulation that cannot be classified is a failed row with status 1, not an input error.
        """
        def refuse(triangulation, params):
            raise ValueError("Neither T Nor D Triangulation")

        monkeypatch.setattr("polytricli.verify.classify", refuse)

        assert run(["verify", "--scope", "bijection", "--max-sum", "2", "--threads", "1"]) == EXIT_FAILURE
        lines = capsys.readouterr().out.splitlines()
        assert lines[-1].startswith("FAIL (")
        assert any("classes-D" in line and "FAIL" in line for line in lines)

    def test_verify_inverse_failure(self, capsys, monkeypatch):
        """
        An inverse that misses its target is caught from both sides of the bijection.
        """
        monkeypatch.setattr("polytricli.verify.bijection_inverse", lambda f, params: Triangulation(0, frozenset()))

        argv = ["verify", "--scope", "bijection", "--max-sum", "2", "--format", "json", "--threads", "1"]
        assert run(argv) == EXIT_FAILURE
        rows = json.loads(capsys.readouterr().out)
        failed = {row["check"] for row in rows if row["status"] != "ok"}

        assert failed == {"bijection", "inverse"}

    def test_render(self, capsys):
        """
        A triangulation of the hexagon-shaped triangle has three diagonals.
        """
        assert run(["render", "1", "1", "1", "--index", "3"]) == EXIT_OK
        dump = json.loads(capsys.readouterr().out)

        assert dump["n"] == 6
        assert len(dump["diagonals"]) == 3


class TestAnalysis:
    """
    Test class for :class:`polytricli.analysis.AnalysisCLI` .
    """
    def test_series_van_hoeij(self, capsys, a087809_prefix):
        """
        The coefficients of the algebraic form match tr(3, r-1).
        """
        rows = _run_csv(capsys, ["series", "van-hoeij", "--order", "9"])

        assert [int(row["coefficient"]) for row in rows] == a087809_prefix
        assert all(row["match"] == "true" for row in rows)

    @pytest.mark.parametrize(
        "argv",
        [["series", "vertical", "2"], ["series", "vertical", "3"], ["series", "horizontal", "3", "--order", "30"]],
        ids=[str(v) for v in range(3)]
    )
    def test_series_gf(self, capsys, argv):
        """
        The root based value agrees with the truncated sum at the default point.
        """
        rows = _run_json(capsys, argv)

        assert float(rows[0]["diff"]) < 1e-8

    def test_asympt(self, capsys):
        """
        The r-inf estimate for tr(3, 5) is 2048.
        """
        row = _run_json(capsys, ["asympt", "r-inf", "--k", "3", "--r", "5"])[0]

        assert row["exact"] == "1847"
        assert row["ratio"] == pytest.approx(1847 / 2048, abs=1e-6)

    def test_asympt_partial(self, capsys):
        """
        Half of eight sides subdivided is the quadrilateral with one point per side.
        """
        row = _run_json(capsys, ["asympt", "partial", "--n", "8", "--alpha", "0.5"])[0]

        assert (row["N"], row["s"], row["exact"]) == ("8", "4", "30")

    def test_asympt_too_large(self, capsys):
        """
        Beyond the exact limit only the estimate is printed.
        """
        row = _run_json(capsys, ["asympt", "k-inf", "--k", "1000", "--r", "5"])[0]

        assert row["exact"] == ""
        assert row["log_estimate"] > 0

    def test_growth(self, capsys):
        """
        The growth factors at integer points followed by the two minimizers.
        """
        assert run(["growth", "--min", "1", "--max", "3", "--step", "1"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()

        assert [line.split() for line in lines[1:5]] == [
            ["grid", "1.000000", "4.000000"],
            ["grid", "2.000000", "3.464102"],
            ["grid", "3.000000", "4.000000"],
            ["integer-argmin", "2.000000", "3.464102"],
        ]
        assert lines[5].split()[0] == "real-argmin"
        assert lines[5].split()[1].startswith("1.49")

    @pytest.mark.parametrize("fmt", ["csv", "json"], ids=["0", "1"])
    def test_growth_argmin_rows(self, capsys, fmt):
        """
        The minimizers are rows in every format, not only in text mode.
        """
        argv = ["growth", "--min", "1", "--max", "3", "--step", "1"]
        rows = _run_csv(capsys, argv) if fmt == "csv" else _run_json(capsys, argv)
        argmins = {row["point"]: float(row["r"]) for row in rows if row["point"] != "grid"}

        assert len(rows) == 5
        assert argmins["integer-argmin"] == 2.0
        assert argmins["real-argmin"] == pytest.approx(1.495, abs=5e-3)

    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["series", "horizontal", "3", "--order", "30"], {0: "1", 1: "4", 2: "29", 3: "229", 4: "1847"}),
            (["series", "vertical", "2"], {0: "3/2", 2: "4", 3: "30"}),
        ],
        ids=["0", "1"]
    )
    def test_series_coefficients(self, capsys, argv, expected):
        """
        The vertical and horizontal rows carry the exact coefficients from degree one.
        """
        rows = _run_json(capsys, argv)

        assert {m: rows[0]["coefficients"][m] for m in expected} == expected


class TestExitCodes:
    """
    Test class for the error handling of :func:`polytricli.main.run` .
    """
    @pytest.mark.parametrize(
        "argv,message",
        DataCounts.usage__unexpected,
        ids=[str(v) for v in range(len(DataCounts.usage__unexpected))]
    )
    def test_usage__unexpected(self, capsys, argv, message):
        """
        Test the invalid inputs of :attr:`DataCounts.usage__unexpected` .
        """
        assert run(argv) == EXIT_USAGE
        assert message in capsys.readouterr().err

    def test_cross_check_failure(self, capsys, monkeypatch):
        """
        Disagreeing formulas under ``--method auto`` give status 1.
        """
        monkeypatch.setattr("polytri.counting.tr_incl_excl", lambda k, r: 0)

        assert run(["count", "3", "3", "--method", "auto"]) == EXIT_FAILURE
        assert "check failed" in capsys.readouterr().err

    def test_main(self, capsys):
        """
        The console script exits with the status of :func:`run`. We patch :attr:`sys.argv` as the shell would set it.
        """
        with patch.object(sys, "argv", ["polytri", "count", "3", "2"]):
            with pytest.raises(SystemExit) as excinfo:
                main()

        assert excinfo.value.code == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1].split() == ["3", "2", "4"]

    def test_argparse_errors(self, capsys):
        """
        :mod:`argparse` rejects malformed input with status 2 before any handler runs.
        """
        with pytest.raises(SystemExit) as excinfo:
            run(["count", "three", "3"])

        assert excinfo.value.code == EXIT_USAGE
