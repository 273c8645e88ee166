"""
The test module for :mod:`polytri.oracle` . The brute-force counts are compared with the closed formulas of
:mod:`polytri.counting`, and the classification and the bijection are exercised on small triangles where every
triangulation can be listed.
"""
import collections
import itertools

import pytest

from polytri.counting import (CrossCheckError, TriangleParams, partial_count, tr_method, triangle_D, triangle_DA,
                              triangle_T, triangle_total)
from polytri.numeric import catalan
from polytri.oracle import (BoundaryLabel, FundamentalSet, Layout, TriClass, TriClassification, Triangulation,
                            balanced_layout, bijection_forward, bijection_inverse, check_legal, classify, count_legal,
                            enumerate_convex, enumerate_fundamental_sets, enumerate_legal, partial_sides,
                            triangle_layout, triangles, triangulation_dump)

CENTRAL: Triangulation = Triangulation(6, frozenset({(1, 3), (3, 5), (1, 5)}))
"""The T-triangulation of :math:`\\Delta(1,1,1)`: three ears around the triangle on the midpoints."""


def _small_triangles(max_sum: int) -> list[TriangleParams]:
    return [
        TriangleParams(a, b, c)
        for a, b, c in itertools.product(range(max_sum + 1), repeat=3)
        if 0 < a + b + c <= max_sum
    ]


class DataOracle:
    """
    Holds the data for :mod:`polytri.oracle` .
    """
    layout__unexpected = [
        ([1], [ValueError, "Too Few Sides"]),
        ([0, 0], [ValueError, "Too Few Points"]),
        ([1, -1, 1], [ValueError, "Negative Subdivision Count"]),
        ("111", [TypeError, "Sides Not A List Of Integers"]),
        ([1, 1.0, 1], [TypeError, "Sides Not A List Of Integers"]),
    ]
    """
    Test cases for :class:`polytri.oracle.Layout` that must raise. The test cases are as follows

    +--------------------------------------+----------------------------------------------------------------------+
    | description                          | reason                                                               |
    +======================================+======================================================================+
    | one side                             | A polygon needs at least two strings.                                |
    +--------------------------------------+----------------------------------------------------------------------+
    | two points                           | Nothing to triangulate.                                              |
    +--------------------------------------+----------------------------------------------------------------------+
    | negative side                        | Subdivision counts are non-negative.                                 |
    +--------------------------------------+----------------------------------------------------------------------+
    | string, float entry                  | Sides must be a list of integers.                                    |
    +--------------------------------------+----------------------------------------------------------------------+

    """

    count_legal__expected = [
        ([1, 1, 1], 4),
        ([2, 2, 2], 29),
        ([1, 1, 1, 1], 30),
        ([0, 0, 0, 0, 0, 0], 14),
        ([2, 0, 0], 1),
        ([0, 0, 0], 1),
        ([1, 1, 1, 1, 1], 250),
        ([3, 3, 3], 229),
    ]
    """
    Test cases for :func:`polytri.oracle.count_legal`, in both modes. Unsubdivided polygons give Catalan numbers, the
    rest must agree with the closed formulas.
    """

    check_legal__unexpected = [
        (Triangulation(6, frozenset({(0, 2), (2, 4), (0, 4)})), "Illegal Diagonal"),
        (Triangulation(6, frozenset({(1, 4), (3, 5), (1, 3)})), "Crossing Diagonals"),
        (Triangulation(6, frozenset({(1, 3), (3, 5)})), "Not A Triangulation Of This Layout"),
        (Triangulation(7, frozenset({(1, 3), (3, 5), (1, 5), (1, 6)})), "Not A Triangulation Of This Layout"),
    ]
    """
    Test cases for :func:`polytri.oracle.check_legal` on :math:`\\Delta(1,1,1)`. The corner triangle uses
    same-string diagonals; the second set has two crossing diagonals; the last two have the wrong size.
    """

    fundamental__unexpected = [
        (FundamentalSet(frozenset({(2, 4), (2, 5)}), (0, 2, 0)), "Diagonals Share Endpoints"),
        (FundamentalSet(frozenset({(1, 4), (2, 5)}), (0, 2, 0)), "Crossing Diagonals"),
        (FundamentalSet(frozenset({(2, 4)}), (1, 0, 0)), "Type Vector Mismatch"),
        (FundamentalSet(frozenset({(0, 4)}), (1, 0, 0)), "Diagonal Not Between Interiors Of Two Sides"),
    ]
    """
    Test cases for :func:`polytri.oracle.bijection_inverse` on :math:`\\Delta(2,2,2)` that must be rejected before
    any reconstruction is attempted.
    """

    worked__expected = [
        (
            Triangulation(16, frozenset({
                (1, 15), (3, 5), (8, 10), (3, 8), (8, 15), (3, 15), (3, 6), (3, 7), (8, 11), (8, 12), (8, 13),
                (8, 14), (2, 15),
            })),
            TriClassification(TriClass.T, 3, True),
            FundamentalSet(frozenset({(2, 15), (3, 7), (8, 14)}), (1, 1, 1)),
        ),
        (
            Triangulation(16, frozenset({
                (1, 15), (8, 10), (4, 12), (4, 13), (5, 12), (6, 12), (7, 12), (8, 12), (8, 11), (3, 13), (3, 14),
                (3, 15), (2, 15),
            })),
            TriClassification(TriClass.D_C, 2, False),
            FundamentalSet(frozenset({(2, 15), (3, 13), (8, 11)}), (2, 0, 1)),
        ),
    ]
    """
    Two triangulations of :math:`\\Delta(3,4,6)`, with B at 0, C at 4 and A at 9. The test cases are as follows

    +--------------------------------------+----------------------------------------------------------------------+
    | description                          | reason                                                               |
    +======================================+======================================================================+
    | T-triangulation                      | Ears at all corners around the central triangle (3, 8, 15), fans     |
    |                                      | from 3 and 8 fill the rest. One fundamental diagonal per corner.     |
    +--------------------------------------+----------------------------------------------------------------------+
    | D_C-triangulation                    | Ears at B and A, corner-side diagonals from C to 12 and 13. Two      |
    |                                      | fundamental diagonals separate B, none separates C.                  |
    +--------------------------------------+----------------------------------------------------------------------+

    """


class TestLayout:
    """
    Class to test :class:`polytri.oracle.Layout` and the layout constructors.
    """
    def test_positions(self):
        """
        :math:`\\Delta(1,1,1)` has six points with corners at 0, 2 and 4.
        """
        layout: Layout = triangle_layout(TriangleParams(1, 1, 1))

        assert layout.n == 6
        assert layout.corners == (0, 2, 4)
        assert layout.position(1, 1) == 3
        assert layout.position(2, 2) == 0
        assert layout.label(3) == BoundaryLabel(1, 1)
        assert layout.interior_side(5) == 2
        assert layout.interior_side(4) is None

    def test_legality(self):
        """
        Diagonals inside a string are illegal; corners lie on two strings.
        """
        layout: Layout = balanced_layout(3, 2)

        assert layout.legal(1, 3)
        assert layout.legal(1, 4)
        assert not layout.legal(0, 2)
        assert not layout.legal(0, 1)
        assert layout.same_string(2, 4)

    @pytest.mark.parametrize(
        "test_input,error",
        DataOracle.layout__unexpected,
        ids=[repr(v) for v in DataOracle.layout__unexpected]
    )
    def test_layout__unexpected(self, test_input, error):
        """
        Test that :class:`polytri.oracle.Layout` raises for :attr:`DataOracle.layout__unexpected` .
        """
        with pytest.raises(error[0]) as excinfo:
            Layout(test_input)

        assert excinfo.match(error[1])

    def test_partial_sides(self):
        """
        Grouped and spread placements of the subdivided sides.
        """
        assert partial_sides(8, 4) == [1, 1, 1, 1]
        assert partial_sides(7, 2) == [1, 1, 0, 0, 0]
        assert partial_sides(7, 2, interleaved=True) == [1, 0, 1, 0, 0]
        assert partial_sides(5, 0, interleaved=True) == [0, 0, 0, 0, 0]


class TestEnumerateConvex:
    """
    Class to test :func:`polytri.oracle.enumerate_convex` .
    """
    def test_catalan_counts(self):
        """
        The n-gon has :math:`C_{n-2}` triangulations, each with n-3 diagonals, all distinct.
        """
        for n in range(3, 10):
            found: list[Triangulation] = list(enumerate_convex(n))

            assert len(found) == catalan(n - 2)
            assert len(set(found)) == len(found)
            assert all(len(t.diagonals) == n - 3 for t in found)

    @pytest.mark.slow
    def test_catalan_counts_large(self):
        """
        The 16-gon, :math:`C_{14}` triangulations.
        """
        assert sum(1 for _ in enumerate_convex(16)) == 2674440

    def test_enumerate_convex__unexpected(self):
        """
        Too few points and non-integers are rejected.
        """
        with pytest.raises(ValueError) as excinfo:
            list(enumerate_convex(2))
        assert excinfo.match("Too Few Points")

        with pytest.raises(TypeError) as excinfo:
            list(enumerate_convex(6.0))
        assert excinfo.match("n Not An Integer")


class TestCountLegal:
    """
    Class to test :func:`polytri.oracle.count_legal` against the closed formulas.
    """
    @pytest.mark.parametrize(
        "test_input,expected",
        DataOracle.count_legal__expected,
        ids=[str(v) for v in range(len(DataOracle.count_legal__expected))]
    )
    def test_count_legal__expected(self, test_input, expected):
        """
        Test both modes against :attr:`DataOracle.count_legal__expected` .
        """
        assert count_legal(test_input) == expected
        assert count_legal(test_input, mode="filter") == expected

    def test_balanced(self):
        """
        The pruned count equals tr(k, r) for every balanced configuration with at most 16 points.
        """
        for k in range(2, 9):
            for r in range(1, 16 // k + 1):
                if k * r >= 3:
                    assert count_legal([r - 1] * k) == tr_method(k, r)

    def test_triangles(self):
        """
        The pruned count equals the triangle total for a + b + c up to 8.
        """
        for params in _small_triangles(8):
            assert count_legal(list(params)) == triangle_total(*params)

    def test_placement_independence(self):
        """
        Where the subdivided sides sit does not change the count.
        """
        for n in range(4, 13):
            for s in range(n // 2 + 1):
                grouped: int = count_legal(partial_sides(n, s))

                assert grouped == partial_count(n, s)
                assert count_legal(partial_sides(n, s, interleaved=True)) == grouped

    def test_enumeration_matches_count(self):
        """
        The pruned enumeration yields exactly the counted triangulations, each of them legal.
        """
        layout: Layout = triangle_layout(TriangleParams(2, 2, 2))
        found: list[Triangulation] = list(enumerate_legal(layout))

        assert len(found) == count_legal([2, 2, 2])
        for triangulation in found:
            check_legal(triangulation, layout)

    def test_filter_guard(self, monkeypatch):
        """
        The filter mode refuses to count when a long same-string diagonal slips through the distance two test.
        """
        monkeypatch.setattr(Layout, "same_string", lambda self, p, q: abs(p - q) == 3)

        with pytest.raises(CrossCheckError) as excinfo:
            count_legal([2, 2, 2], mode="filter")

        assert excinfo.match("Same string diagonal survived the distance two filter")

    def test_count_legal__unexpected(self):
        """
        Unknown modes are rejected.
        """
        with pytest.raises(ValueError) as excinfo:
            count_legal([1, 1, 1], mode="fast")

        assert excinfo.match("Unknown Mode fast")

    @pytest.mark.slow
    def test_triangles_large(self):
        """
        The filter mode agrees with the triangle total for a + b + c up to 10.
        """
        for params in _small_triangles(10):
            assert count_legal(list(params), mode="filter") == triangle_total(*params)


class TestCheckLegal:
    """
    Class to test :func:`polytri.oracle.check_legal` .
    """
    def test_check_legal__expected(self):
        """
        The central triangulation of :math:`\\Delta(1,1,1)` is legal.
        """
        check_legal(CENTRAL, triangle_layout(TriangleParams(1, 1, 1)))

    @pytest.mark.parametrize(
        "test_input,error",
        DataOracle.check_legal__unexpected,
        ids=[str(v) for v in range(len(DataOracle.check_legal__unexpected))]
    )
    def test_check_legal__unexpected(self, test_input, error):
        """
        Test that :func:`polytri.oracle.check_legal` raises for :attr:`DataOracle.check_legal__unexpected` .
        """
        with pytest.raises(ValueError) as excinfo:
            check_legal(test_input, triangle_layout(TriangleParams(1, 1, 1)))

        assert excinfo.match(error)


class TestClassify:
    """
    Class to test :func:`polytri.oracle.triangles` and :func:`polytri.oracle.classify` .
    """
    def test_triangles(self):
        """
        The faces of the central triangulation.
        """
        assert triangles(CENTRAL) == [(0, 1, 5), (1, 2, 3), (1, 3, 5), (3, 4, 5)]

    def test_central(self):
        """
        Three ears and a central triangle.
        """
        result = classify(CENTRAL, TriangleParams(1, 1, 1))

        assert result.cls is TriClass.T
        assert result.ear_count == 3
        assert result.has_central_triangle

    def test_class_counts(self):
        """
        Every class count agrees with its formula on :math:`\\Delta(2,1,1)`: three D_A, one D_B, one D_C and two T.
        """
        params: TriangleParams = TriangleParams(2, 1, 1)
        classes = collections.Counter(classify(t, params).cls for t in enumerate_legal(triangle_layout(params)))

        assert classes[TriClass.D_A] == triangle_DA(2, 1, 1) == 3
        assert classes[TriClass.D_B] == triangle_DA(1, 1, 2) == 1
        assert classes[TriClass.D_C] == triangle_DA(1, 2, 1) == 1
        assert classes[TriClass.T] == triangle_T(2, 1, 1) == 2

    def test_dichotomy(self):
        """
        Every legal triangulation of every small triangle falls in exactly one class, and the totals match.
        """
        for params in _small_triangles(6):
            classes = collections.Counter(
                classify(t, params).cls for t in enumerate_legal(triangle_layout(params))
            )
            d_total: int = classes[TriClass.D_A] + classes[TriClass.D_B] + classes[TriClass.D_C]

            assert d_total == triangle_D(*params)
            assert classes[TriClass.T] == triangle_T(*params)


class TestBijection:
    """
    Class to test :func:`polytri.oracle.bijection_forward` , :func:`polytri.oracle.bijection_inverse` and
    :func:`polytri.oracle.enumerate_fundamental_sets` .
    """
    @pytest.mark.parametrize(
        "triangulation,classification,fundamental",
        DataOracle.worked__expected,
        ids=[str(v) for v in range(len(DataOracle.worked__expected))]
    )
    def test_worked__expected(self, triangulation, classification, fundamental):
        """
        Test classification, image and preimage of the triangulations in :attr:`DataOracle.worked__expected` .
        """
        params: TriangleParams = TriangleParams(3, 4, 6)

        assert classify(triangulation, params) == classification
        assert bijection_forward(triangulation, params) == fundamental
        assert bijection_inverse(fundamental, params) == triangulation

    def test_central_maps_to_empty_set(self):
        """
        The T-triangulation of :math:`\\Delta(1,1,1)` has the empty fundamental set, and back.
        """
        params: TriangleParams = TriangleParams(1, 1, 1)
        empty: FundamentalSet = FundamentalSet(frozenset(), (0, 0, 0))

        assert bijection_forward(CENTRAL, params) == empty
        assert bijection_inverse(empty, params) == CENTRAL

    def test_fundamental_set_count(self):
        """
        The fundamental sets are as many as the triangulations.
        """
        assert sum(1 for _ in enumerate_fundamental_sets(TriangleParams(1, 1, 1))) == 4
        assert sum(1 for _ in enumerate_fundamental_sets(TriangleParams(2, 2, 2))) == 29

    def test_round_trip(self):
        """
        For every triangle with a + b + c up to 4, the forward map is injective onto the fundamental sets and the
        two maps undo each other in both directions.
        """
        for params in _small_triangles(4):
            found: list[Triangulation] = list(enumerate_legal(triangle_layout(params)))
            images: list[FundamentalSet] = [bijection_forward(t, params) for t in found]

            assert len(set(images)) == len(found)
            assert set(images) == set(enumerate_fundamental_sets(params))
            for triangulation, image in zip(found, images):
                assert bijection_inverse(image, params) == triangulation
            for fundamental in enumerate_fundamental_sets(params):
                assert bijection_forward(bijection_inverse(fundamental, params), params) == fundamental

    @pytest.mark.slow
    def test_round_trip_large(self):
        """
        The same for a + b + c up to 7.
        """
        for params in _small_triangles(7):
            found: list[Triangulation] = list(enumerate_legal(triangle_layout(params)))

            assert {bijection_forward(t, params) for t in found} == set(enumerate_fundamental_sets(params))
            for triangulation in found:
                assert bijection_inverse(bijection_forward(triangulation, params), params) == triangulation
            for fundamental in enumerate_fundamental_sets(params):
                assert bijection_forward(bijection_inverse(fundamental, params), params) == fundamental

    @pytest.mark.parametrize(
        "test_input,error",
        DataOracle.fundamental__unexpected,
        ids=[str(v) for v in range(len(DataOracle.fundamental__unexpected))]
    )
    def test_bijection_inverse__unexpected(self, test_input, error):
        """
        Test that :func:`polytri.oracle.bijection_inverse` raises for :attr:`DataOracle.fundamental__unexpected` .
        """
        with pytest.raises(ValueError) as excinfo:
            bijection_inverse(test_input, TriangleParams(2, 2, 2))

        assert excinfo.match(error)


class TestDump:
    """
    Class to test :func:`polytri.oracle.triangulation_dump` .
    """
    def test_dump(self):
        """
        The dump carries everything needed to draw the triangulation.
        """
        dump = triangulation_dump(CENTRAL, triangle_layout(TriangleParams(1, 1, 1)))

        assert dump == {
            "n": 6,
            "sides": [1, 1, 1],
            "corners": [0, 2, 4],
            "labels": [[0, 0], [0, 1], [1, 0], [1, 1], [2, 0], [2, 1]],
            "diagonals": [[1, 3], [1, 5], [3, 5]],
        }
