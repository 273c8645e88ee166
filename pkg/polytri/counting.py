"""
Closed-form counts of triangulations of convex polygons with subdivided sides. Each route is an independent
implementation so that the routes can be played off against each other and against :mod:`polytri.oracle`.

The configurations are

* the balanced polygon with k corners and each side subdivided by r-1 points (kr points in total),
* the triangle :math:`\\Delta(a,b,c)` with a, b and c interior points on its three sides,
* the partially subdivided polygon with N points of which s sides carry one subdivision point,
* the indented balanced polygon, whose count is the balanced count times :math:`C_{r-1}^k`,
* an arbitrary polygon given by its list of per-side subdivision counts.

+--------------------------------------+-------------------------------------------------------------------+
| function                             | purpose                                                           |
+======================================+===================================================================+
| :func:`.tr_incl_excl`                | Inclusion-exclusion over essentially forbidden diagonals.         |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr_sum1`, :func:`.tr_sum2`   | The two explicit double sums.                                     |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr_coeff_extract`            | Coefficient extraction from the rational kernel.                  |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr_kernel`                   | The symmetric kernel coefficient, also defined for one corner.    |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr_method`                   | Dispatch between the balanced routes, with cross checking.        |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr3_A` ... :func:`.tr3_D`    | Five routes to the subdivided triangle with equal sides.          |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.tr3_rec_check`               | Verifies the first order recurrence of the equal sided triangle.  |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.triangle_D`,                 | D-, T- and total counts of :math:`\\Delta(a,b,c)`.                 |
| :func:`.triangle_DA`,                |                                                                   |
| :func:`.triangle_T`,                 |                                                                   |
| :func:`.triangle_total`              |                                                                   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.triangle_sum`                | Triple binomial sum over fundamental set types.                   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.partial_count`               | Polygon with s sides subdivided once.                             |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.isc_count`                   | Indented balanced polygon.                                        |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.general_count`               | Arbitrary side subdivisions.                                      |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.evaluate_family`             | Re-evaluates a :class:`CountRecord`.                              |
+--------------------------------------+-------------------------------------------------------------------+

"""
import enum
import logging
import math
from fractions import Fraction
from typing import NamedTuple

from polytri.numeric import (
    Count, IntPoly, RatSeries, binomial, binomial_signed, catalan, catalan_table, string_poly, poly_mul, poly_pow,
    poly_coefficient, make_poly, make_series, series_from_poly, series_mul, series_pow
)

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.counting")

METHODS: tuple[str, ...] = ("sum1", "sum2", "ie", "coeff", "auto")
"""The routes accepted by :func:`tr_method`."""


class CrossCheckError(AssertionError):
    """Two independent formulas disagreed on the same parameters."""


class Family(str, enum.Enum):
    """The configuration families a :class:`CountRecord` can describe."""
    BALANCED = "balanced"
    TRIANGLE = "triangle"
    PARTIAL = "partial"
    GENERAL = "general"
    ISC = "isc"


class SubdivisionParams(NamedTuple):
    """
    The balanced configuration: k corners, each side made of r edges (r-1 subdivision points).
    """
    k: int
    r: int

    def validate(self) -> None:
        """
        :raises TypeError: If the parameters are not integers.
        :raises ValueError: If k < 2, r < 1 or there are fewer than three points.
        """
        _check_ints("SubdivisionParams", self.k, self.r)

        if self.k < 2 or self.r < 1:
            logger.critical("SubdivisionParams - Out Of Range")
            raise ValueError("Need k >= 2 And r >= 1")

        if self.k * self.r < 3:
            logger.critical("SubdivisionParams - Too Few Points")
            raise ValueError("Too Few Points")


class TriangleParams(NamedTuple):
    """
    The triangle :math:`\\Delta(a,b,c)`: a points inside side BC, b inside CA and c inside AB.
    """
    a: int
    b: int
    c: int

    def validate(self, allow_empty: bool = False) -> None:
        """
        :raises TypeError: If the parameters are not integers.
        :raises ValueError: If a parameter is negative, or all are zero and ``allow_empty`` is not set.
        """
        _check_ints("TriangleParams", self.a, self.b, self.c)

        if min(self) < 0:
            logger.critical("TriangleParams - Negative Parameter")
            raise ValueError("Negative Parameter")

        if not allow_empty and self.a == self.b == self.c == 0:
            logger.critical("TriangleParams - All Zero")
            raise ValueError("All Parameters Zero")


class PartialParams(NamedTuple):
    """
    The polygon with N points in total, s of its sides carrying one subdivision point.
    """
    N: int
    s: int

    def validate(self) -> None:
        """
        :raises TypeError: If the parameters are not integers.
        :raises ValueError: If N < 3 or s is outside [0, N/2].
        """
        _check_ints("PartialParams", self.N, self.s)

        if self.N < 3:
            logger.critical("PartialParams - Too Few Points")
            raise ValueError("Too Few Points")

        if self.s < 0 or 2 * self.s > self.N:
            logger.critical("PartialParams - Subdivided Sides Out Of Range")
            raise ValueError("Need 0 <= s <= N/2")


class CountRecord(NamedTuple):
    """
    A computed count tagged with the family and parameters it belongs to. This is what the cache stores.
    """
    family: Family
    params: tuple[int, ...]
    count: Count


def _check_ints(func: str, *values: object) -> None:
    """Log and raise unless every value is a plain integer."""
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        logger.critical(func + " - Incorrect Input Type")
        raise TypeError("Parameters Not Integers")


def _halve(doubled: int, func: str) -> Count:
    """Divide a doubled sum by two, insisting that the division is exact."""
    half, odd = divmod(doubled, 2)
    if odd:
        logger.critical(func + " - Odd Doubled Sum")
        raise CrossCheckError(func + " produced a non-integer count")
    return half


def _alternating_catalan_sum(choices: IntPoly, n: int) -> Count:
    """
    :math:`\\sum_m (-1)^m [x^m]\\,choices \\cdot C_{n-m-2}`, the inclusion-exclusion sum over sets of m pairwise
    non-crossing essentially forbidden diagonals, each set leaving a convex (n-m)-gon.
    """
    catalans: list[Count] = catalan_table(n - 2)
    total: int = 0
    m: int
    for m, a_m in enumerate(choices.coeffs):
        if m > n - 2:
            break
        total += (-a_m if m % 2 else a_m) * catalans[n - m - 2]
    return total


def tr_incl_excl(k: int, r: int) -> Count:
    """
    Inclusion-exclusion over the essentially forbidden diagonals of the balanced configuration,
    :math:`\\sum_m (-1)^m a_{k,r,m} C_{kr-m-2}`.

    >>> from polytri.counting import tr_incl_excl
    >>> tr_incl_excl(4, 2)
    30

    :raises ValueError: If kr < 3.
    :param int k: Number of corners.
    :param int r: Edges per side.
    :rtype: Count
    :return: The number of triangulations.
    """
    SubdivisionParams(k, r).validate()

    return _alternating_catalan_sum(poly_pow(string_poly(r), k), k * r)


def tr_sum1(k: int, r: int) -> Count:
    """
    The first explicit double sum,

    .. math::

       \\sum_{j=0}^{k}\\sum_{\\ell=0}^{rk-(r+1)j-2} (-1)^j 2^\\ell \\binom{k}{j}\\binom{k-2+\\ell}{\\ell}
       \\binom{(r-1)k-\\ell-3}{rk-(r+1)j-\\ell-2}.

    The last binomial is taken with the signed extension (:func:`polytri.numeric.binomial_signed`); its upper index
    goes negative for small r.

    :raises ValueError: If kr < 3.
    :rtype: Count
    """
    SubdivisionParams(k, r).validate()

    total: int = 0
    j: int
    ell: int
    for j in range(k + 1):
        outer: int = (-1) ** j * math.comb(k, j)
        for ell in range(r * k - (r + 1) * j - 1):
            total += (
                outer * 2 ** ell * binomial_signed(k - 2 + ell, ell)
                * binomial_signed((r - 1) * k - ell - 3, r * k - (r + 1) * j - ell - 2)
            )

    return total


def tr_sum2(k: int, r: int) -> Count:
    """
    The second explicit double sum,

    .. math::

       \\sum_{j=0}^{k}\\sum_{\\ell=0}^{rk-(r+1)j-1} (-1)^{j+1} 2^{\\ell-1} \\binom{k}{j}\\binom{k-3+\\ell}{\\ell}
       \\binom{(r-1)k-\\ell-2}{rk-(r+1)j-\\ell-1}.

    The sum is accumulated with :math:`2^\\ell` and halved at the end so that everything stays integral.

    >>> from polytri.counting import tr_sum2
    >>> tr_sum2(7, 6)
    182814912101920

    :raises ValueError: If kr < 3.
    :param int k: Number of corners.
    :param int r: Edges per side.
    :rtype: Count
    :return: The number of triangulations.
    """
    SubdivisionParams(k, r).validate()

    doubled: int = 0
    j: int
    ell: int
    for j in range(k + 1):
        outer: int = (-1) ** (j + 1) * math.comb(k, j)
        for ell in range(r * k - (r + 1) * j):
            doubled += (
                outer * 2 ** ell * binomial_signed(k - 3 + ell, ell)
                * binomial_signed((r - 1) * k - ell - 2, r * k - (r + 1) * j - ell - 1)
            )

    return _halve(doubled, "tr_sum2")


def _side_kernel(r: int) -> IntPoly:
    """:math:`(1-t)^{r+1} - t^{r+1}`."""
    coeffs: list[int] = [binomial(r + 1, i) * (-1) ** i for i in range(r + 2)]
    coeffs[r + 1] -= 1
    return make_poly(coeffs)


def tr_coeff_extract(k: int, r: int) -> Count:
    """
    The count as a single coefficient,
    :math:`[t^{rk-2}]\\,((1-t)^{r+1}-t^{r+1})^k (1-t)^{-rk} (1-2t)^{-(k-1)}`, computed with exact truncated series.
    Both double sums are expansions of this coefficient.

    :raises ValueError: If kr < 3.
    :rtype: Count
    """
    SubdivisionParams(k, r).validate()

    order: int = r * k - 2
    numerator: RatSeries = series_from_poly(poly_pow(_side_kernel(r), k), order)
    one_minus_t: RatSeries = make_series([1, -1], order)
    one_minus_2t: RatSeries = make_series([1, -2], order)

    product: RatSeries = series_mul(numerator, series_pow(one_minus_t, -r * k))
    product = series_mul(product, series_pow(one_minus_2t, -(k - 1)))

    value: Fraction = product.coeffs[order]
    assert value.denominator == 1
    return int(value)


def tr_kernel(k: int, r: int) -> Fraction:
    """
    The symmetric kernel coefficient
    :math:`-\\tfrac12 [t^{rk-1}]\\,((1-t)^{r+1}-t^{r+1})^k (1-t)^{-rk} (1-2t)^{2-k}`.

    It equals the number of triangulations whenever :math:`rk \\geq 3`. For a single corner it is the constant term the
    vertical generating function carries at :math:`x^1` (3/2 for r = 2, -1 for r = 3 and zero from r = 4 on).

    >>> from polytri.counting import tr_kernel
    >>> tr_kernel(1, 2)
    Fraction(3, 2)

    :raises ValueError: If k or r is smaller than one.
    :param int k: Number of corners, at least one.
    :param int r: Edges per side.
    :rtype: fractions.Fraction
    :return: The kernel coefficient.
    """
    _check_ints("tr_kernel", k, r)

    if k < 1 or r < 1:
        logger.critical("tr_kernel - Out Of Range")
        raise ValueError("Need k >= 1 And r >= 1")

    order: int = r * k - 1
    numerator: RatSeries = series_from_poly(poly_pow(_side_kernel(r), k), order)
    product: RatSeries = series_mul(numerator, series_pow(make_series([1, -1], order), -r * k))
    product = series_mul(product, series_pow(make_series([1, -2], order), 2 - k))

    return -product.coeffs[order] / 2


def tr_method(k: int, r: int, method: str = "sum2") -> Count:
    """
    The balanced count by a chosen route. ``auto`` evaluates both :func:`tr_sum2` and :func:`tr_incl_excl` and
    refuses to answer if they differ. The digon with one edge per side, which the formulas exclude, is one
    triangulation by convention.

    :raises ValueError: If the method is not one of :data:`METHODS`.
    :raises CrossCheckError: If ``auto`` finds a disagreement.
    :param int k: Number of corners.
    :param int r: Edges per side.
    :param str method: One of ``sum1``, ``sum2``, ``ie``, ``coeff``, ``auto``.
    :rtype: Count
    :return: The number of triangulations.
    """
    _check_ints("tr_method", k, r)

    if method not in METHODS:
        logger.critical("tr_method - Unknown Method " + str(method))
        raise ValueError("Unknown Method " + str(method))

    if (k, r) == (2, 1):
        return 1

    if method == "sum1":
        return tr_sum1(k, r)
    if method == "ie":
        return tr_incl_excl(k, r)
    if method == "coeff":
        return tr_coeff_extract(k, r)

    primary: Count = tr_sum2(k, r)
    if method == "auto":
        secondary: Count = tr_incl_excl(k, r)
        if primary != secondary:
            logger.critical(f"tr_method - Cross Check Failed k={k} r={r}: {primary} != {secondary}")
            raise CrossCheckError(f"Formulas disagree at k={k}, r={r}")
        logger.debug(f"tr_method - k={k} r={r} agreed on two routes")

    return primary


def _check_r(func: str, r: int) -> None:
    _check_ints(func, r)
    if r < 1:
        logger.critical(func + " - Non Positive r")
        raise ValueError("Need r >= 1")


def tr3_A(r: int) -> Count:
    """
    The equal sided triangle from the second double sum specialised to three corners,

    .. math::

       -\\sum_{\\ell=0}^{3r-1} 2^{\\ell-1}\\binom{3r-\\ell-5}{3r-\\ell-1}
       +3\\sum_{\\ell=0}^{2r-2} 2^{\\ell-1}\\binom{3r-\\ell-5}{2r-\\ell-2}
       -3\\sum_{\\ell=0}^{r-3} 2^{\\ell-1}\\binom{3r-\\ell-5}{r-\\ell-3},

    with signed binomial coefficients.
    """
    _check_r("tr3_A", r)

    doubled: int = 0
    ell: int
    for ell in range(3 * r):
        doubled -= 2 ** ell * binomial_signed(3 * r - ell - 5, 3 * r - ell - 1)
    for ell in range(2 * r - 1):
        doubled += 3 * 2 ** ell * binomial_signed(3 * r - ell - 5, 2 * r - ell - 2)
    for ell in range(r - 2):
        doubled -= 3 * 2 ** ell * binomial_signed(3 * r - ell - 5, r - ell - 3)

    return _halve(doubled, "tr3_A")


def tr3_B(r: int) -> Count:
    """:math:`-2^{3r-5} + \\tfrac32 \\sum_{j=0}^{r} \\binom{3r-4}{2r-2-j}`, for r >= 2; one triangulation at r = 1."""
    _check_r("tr3_B", r)

    if r == 1:
        return 1

    doubled: int = 3 * sum(binomial(3 * r - 4, 2 * r - 2 - j) for j in range(r + 1)) - 2 ** (3 * r - 4)
    return _halve(doubled, "tr3_B")


def tr3_B2(r: int) -> Count:
    """
    :math:`2^{3r-4} - 3\\sum_{j=0}^{r-3}\\binom{3r-4}{j}`, the fastest of the routes.

    >>> from polytri.counting import tr3_B2
    >>> [tr3_B2(r) for r in range(1, 7)]
    [1, 4, 29, 229, 1847, 14974]
    """
    _check_r("tr3_B2", r)

    if r == 1:
        return 1

    return 2 ** (3 * r - 4) - 3 * sum(math.comb(3 * r - 4, j) for j in range(r - 2))


def tr3_C(r: int) -> Count:
    """The triple binomial sum over fundamental set types of :math:`\\Delta(r-1,r-1,r-1)`."""
    _check_r("tr3_C", r)

    return triangle_sum(r - 1, r - 1, r - 1)


def tr3_D(r: int) -> Count:
    """
    With :math:`s = r-2`, :math:`3\\binom{3s+2}{s} + \\sum_{j=0}^{s}\\frac{5j+1}{2j+1}\\binom{3j}{j}8^{s-j}`.
    The rational terms are summed exactly and the total must be integral.
    """
    _check_r("tr3_D", r)

    if r == 1:
        return 1

    s: int = r - 2
    total: Fraction = Fraction(3 * math.comb(3 * s + 2, s))
    j: int
    for j in range(s + 1):
        total += Fraction(5 * j + 1, 2 * j + 1) * math.comb(3 * j, j) * 8 ** (s - j)

    if total.denominator != 1:
        logger.critical("tr3_D - Non Integral Total")
        raise CrossCheckError("tr3_D produced a non-integer count")

    return int(total)


def tr3_rec_check(r_max: int) -> bool:
    """
    Checks :math:`tr(3,r+1) - 8\\,tr(3,r) = 3(5r^2-19r+6)(3r-4)!/((r-2)!(2r)!)` for :math:`2 \\leq r < r_{max}` in
    exact arithmetic.

    >>> from polytri.counting import tr3_rec_check
    >>> tr3_rec_check(30)
    True

    :raises ValueError: If r_max < 3.
    :param int r_max: Exclusive upper bound on r.
    :rtype: bool
    :return: Whether every instance holds.
    """
    _check_ints("tr3_rec_check", r_max)

    if r_max < 3:
        logger.critical("tr3_rec_check - r_max Too Small")
        raise ValueError("Need r_max >= 3")

    r: int
    for r in range(2, r_max):
        lhs: int = tr3_B2(r + 1) - 8 * tr3_B2(r)
        rhs: Fraction = Fraction(
            3 * (5 * r * r - 19 * r + 6) * math.factorial(3 * r - 4),
            math.factorial(r - 2) * math.factorial(2 * r)
        )
        if rhs != lhs:
            logger.critical(f"tr3_rec_check - Recurrence Fails At r={r}: {lhs} != {rhs}")
            return False

    return True


def triangle_DA(a: int, b: int, c: int) -> Count:
    """
    The number of triangulations whose corner-side diagonals all leave corner A, :math:`\\binom{a+b+c-1}{a-1}`.
    Zero when side BC has no interior point.
    """
    TriangleParams(a, b, c).validate()

    return binomial(a + b + c - 1, a - 1)


def triangle_D(a: int, b: int, c: int) -> Count:
    """
    Triangulations without a central triangle, summed over the three corners.

    >>> from polytri.counting import triangle_D
    >>> triangle_D(1, 1, 1)
    3
    """
    return triangle_DA(a, b, c) + triangle_DA(b, c, a) + triangle_DA(c, a, b)


def _lower_tail(n: int, top: int) -> int:
    """:math:`\\sum_{\\ell=0}^{top}\\binom{n}{\\ell}`, empty when top < 0."""
    return sum(binomial(n, ell) for ell in range(top + 1))


def triangle_T(a: int, b: int, c: int) -> Count:
    """
    Triangulations with a central triangle,
    :math:`2^{n-1} - \\sum_{x \\in \\{a,b,c\\}} \\sum_{\\ell<x}\\binom{n-1}{\\ell}` with :math:`n = a+b+c`.
    """
    TriangleParams(a, b, c).validate()

    n: int = a + b + c
    return 2 ** (n - 1) - _lower_tail(n - 1, a - 1) - _lower_tail(n - 1, b - 1) - _lower_tail(n - 1, c - 1)


def triangle_T_double_sum(a: int, b: int, c: int) -> Count:
    """
    The central triangle count read off the trivariate generating function,
    :math:`\\sum_{i<a}\\sum_{j<b}\\binom{i+j}{i}\\binom{a+b+c-2-i-j}{c-1}`.
    """
    TriangleParams(a, b, c).validate()

    return sum(
        binomial(i + j, i) * binomial(a + b + c - 2 - i - j, c - 1)
        for i in range(a) for j in range(b)
    )


def triangle_total(a: int, b: int, c: int) -> Count:
    """
    All triangulations of :math:`\\Delta(a,b,c)`,
    :math:`2^{n-1} - \\sum_{\\ell\\leq a-2}\\binom{n-1}{\\ell} - \\dots` with :math:`n = a+b+c`.

    >>> from polytri.counting import triangle_total
    >>> triangle_total(2, 2, 2)
    29

    :raises ValueError: If all parameters are zero or one is negative.
    :param int a: Points inside BC.
    :param int b: Points inside CA.
    :param int c: Points inside AB.
    :rtype: Count
    :return: The number of triangulations.
    """
    TriangleParams(a, b, c).validate()

    n: int = a + b + c
    return 2 ** (n - 1) - _lower_tail(n - 1, a - 2) - _lower_tail(n - 1, b - 2) - _lower_tail(n - 1, c - 2)


def triangle_sum(a: int, b: int, c: int) -> Count:
    """
    :math:`\\sum\\binom{a}{\\alpha+\\beta}\\binom{b}{\\beta+\\gamma}\\binom{c}{\\gamma+\\alpha}` over
    :math:`\\alpha,\\beta,\\gamma \\geq 0`, one term per type of fundamental set. Defined for the empty triangle too,
    where it is 1.
    """
    TriangleParams(a, b, c).validate(allow_empty=True)

    total: int = 0
    alpha: int
    beta: int
    gamma: int
    for alpha in range(a + 1):
        for beta in range(a - alpha + 1):
            for gamma in range(min(b - beta, c - alpha) + 1):
                total += math.comb(a, alpha + beta) * math.comb(b, beta + gamma) * math.comb(c, gamma + alpha)

    return total


def partial_count(N: int, s: int) -> Count:
    """
    The polygon with N points, s sides subdivided once: :math:`\\sum_{m=0}^{s}(-1)^m\\binom{s}{m}C_{N-m-2}`.

    >>> from polytri.counting import partial_count
    >>> partial_count(8, 4)
    30
    """
    PartialParams(N, s).validate()

    return _alternating_catalan_sum(make_poly(binomial(s, m) for m in range(s + 1)), N)


def isc_count(k: int, r: int) -> Count:
    """
    The indented balanced polygon. Its string edges are forced, which splits it into the balanced polygon and k
    convex (r+1)-gons.
    """
    return tr_sum2(k, r) * catalan(r - 1) ** k


def general_count(sides: list[int]) -> Count:
    """
    Inclusion-exclusion for an arbitrary polygon, side i carrying ``sides[i]`` interior points. The choice polynomial
    is the product of the per-side string polynomials.

    >>> from polytri.counting import general_count
    >>> general_count([1, 1, 1])
    4

    :raises TypeError: If sides is not a list of integers.
    :raises ValueError: If there are fewer than three sides or a negative entry.
    :param list[int] sides: Interior points per side, in boundary order.
    :rtype: Count
    :return: The number of triangulations.
    """
    if not isinstance(sides, (list, tuple)):
        logger.critical("general_count - Incorrect Input Type")
        raise TypeError("Sides Not A List")
    _check_ints("general_count", *sides)

    if len(sides) < 3:
        logger.critical("general_count - Too Few Sides")
        raise ValueError("Need At Least 3 Sides")

    if min(sides) < 0:
        logger.critical("general_count - Negative Side")
        raise ValueError("Negative Subdivision Count")

    choices: IntPoly = IntPoly((1,))
    for a_i in sides:
        choices = poly_mul(choices, string_poly(a_i + 1))

    return _alternating_catalan_sum(choices, len(sides) + sum(sides))


def evaluate_family(family: Family, params: tuple[int, ...]) -> Count:
    """
    Evaluates the default formula of a family. Used to rebuild or audit a :class:`CountRecord`.

    :raises ValueError: If the parameter tuple has the wrong length for the family.
    """
    family = Family(family)
    expected_length: dict[Family, int] = {Family.BALANCED: 2, Family.TRIANGLE: 3, Family.PARTIAL: 2, Family.ISC: 2}

    if family in expected_length and len(params) != expected_length[family]:
        logger.critical("evaluate_family - Wrong Parameter Count For " + family.value)
        raise ValueError("Wrong Parameter Count For " + family.value)

    if family is Family.BALANCED:
        return tr_method(params[0], params[1])
    if family is Family.TRIANGLE:
        return triangle_total(*params)
    if family is Family.PARTIAL:
        return partial_count(*params)
    if family is Family.ISC:
        return isc_count(*params)
    return general_count(list(params))


def count_record(family: Family, params: tuple[int, ...]) -> CountRecord:
    """Evaluate and wrap in a :class:`CountRecord`."""
    return CountRecord(Family(family), tuple(params), evaluate_family(family, params))
