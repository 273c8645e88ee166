"""
Exact arithmetic used by every counting formula. Integers are Python's arbitrary precision :class:`int`, rationals
are :class:`fractions.Fraction` and polynomials and truncated power series are stored densely, index equal to degree.
The functions in this module are

+--------------------------------------+-------------------------------------------------------------------+
| function                             | purpose                                                           |
+======================================+===================================================================+
| :func:`.binomial`                    | Binomial coefficient, zero outside the combinatorial range.       |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.binomial_signed`             | Binomial coefficient with the signed extension to negative upper  |
|                                      | index, as produced by expanding negative powers.                  |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.catalan`                     | The n-th Catalan number.                                          |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.catalan_table`               | All Catalan numbers up to an index.                               |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.string_poly`                 | Non-adjacent subset polynomial of one subdivided side.            |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.chebyshev_u`                 | Chebyshev polynomial of the second kind.                          |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.a_coeff`                     | Number of ways to pick m non-crossing essentially forbidden       |
|                                      | diagonals.                                                        |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.poly_mul`, :func:`.poly_pow` | Integer polynomial product and power.                             |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.series_mul`                  | Product of truncated rational series.                             |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.series_compose`              | Composition a(b(x)) of truncated series.                          |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.series_reversion`            | Compositional inverse by Lagrange inversion.                      |
+--------------------------------------+-------------------------------------------------------------------+

"""
import logging
import math
from fractions import Fraction
from typing import NamedTuple, Union
from collections.abc import Iterable

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.numeric")

Count = int
"""An exact, non-negative triangulation count. Python integers never overflow, so every count is exact."""

Rational = Union[int, Fraction]
"""Anything that converts to a :class:`fractions.Fraction` without rounding."""


class IntPoly(NamedTuple):
    """
    A dense integer polynomial. ``coeffs[i]`` is the coefficient of :math:`x^i`. Trailing zeros are stripped by
    :func:`make_poly`, so the zero polynomial is the empty tuple.

    >>> from polytri.numeric import make_poly
    >>> make_poly([1, 3, 1, 0])
    IntPoly(coeffs=(1, 3, 1))
    """
    coeffs: tuple[int, ...]
    """Coefficients by ascending degree."""

    @property
    def degree(self) -> int:
        """The degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1


class RatSeries(NamedTuple):
    """
    A power series with exact rational coefficients, known up to and including :math:`x^{order}`. Terms beyond the
    order are unknown, not zero. :func:`make_series` always stores exactly ``order + 1`` coefficients, which keeps
    equality structural.
    """
    coeffs: tuple[Fraction, ...]
    """Coefficients by ascending degree, length ``order + 1``."""

    order: int
    """The truncation order."""


def _check_ints(func: str, *values: object) -> None:
    """
    Log and raise if any of the values is not an integer. :class:`bool` is rejected too.
    """
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        logger.critical(func + " - Incorrect Input Type")
        raise TypeError("Parameters Not Integers")


def make_poly(coeffs: Iterable[int]) -> IntPoly:
    """
    Build a normalized :class:`IntPoly` from any iterable of integers.

    :param Iterable[int] coeffs: Coefficients by ascending degree.
    :rtype: IntPoly
    :return: The polynomial without trailing zero coefficients.
    """
    values: list[int] = list(coeffs)

    # Strip trailing zeros so that the degree is well defined.
    while values and values[-1] == 0:
        values.pop()

    return IntPoly(tuple(values))


def make_series(coeffs: Iterable[Rational], order: int) -> RatSeries:
    """
    Build a :class:`RatSeries` truncated at ``order``, padding missing coefficients with zero.

    >>> from polytri.numeric import make_series
    >>> make_series([1, 1], 3)
    RatSeries(coeffs=(Fraction(1, 1), Fraction(1, 1), Fraction(0, 1), Fraction(0, 1)), order=3)

    :raises ValueError: If the order is negative.
    :param Iterable[Rational] coeffs: Known coefficients by ascending degree.
    :param int order: The truncation order.
    :rtype: RatSeries
    :return: The truncated series.
    """
    _check_ints("make_series", order)

    if order < 0:
        logger.critical("make_series - Negative Order")
        raise ValueError("Negative Order")

    values: list[Fraction] = [Fraction(c) for c in coeffs][:order + 1]
    values.extend([Fraction(0)] * (order + 1 - len(values)))

    return RatSeries(tuple(values), order)


def binomial(n: int, k: int) -> Count:
    """
    The binomial coefficient with the combinatorial zero convention. It is zero when ``k < 0``, when ``k > n >= 0``
    and whenever ``n < 0``.

    >>> from polytri.numeric import binomial
    >>> binomial(5, 2)
    10
    >>> binomial(3, 5)
    0

    :raises TypeError: If the arguments are not integers.
    :param int n: Upper index.
    :param int k: Lower index.
    :rtype: Count
    :return: :math:`\\binom{n}{k}` or zero outside the range.
    """
    _check_ints("binomial", n, k)

    if n < 0 or k < 0 or k > n:
        return 0

    return math.comb(n, k)


def binomial_signed(n: int, k: int) -> int:
    """
    The binomial coefficient extended to negative upper index by
    :math:`\\binom{n}{k} = (-1)^k \\binom{k-n-1}{k}`. This is the coefficient of :math:`x^k` in :math:`(1+x)^n` for
    every integer n, which is what coefficient extraction from negative powers produces.

    >>> from polytri.numeric import binomial_signed
    >>> binomial_signed(-1, 3)
    -1
    >>> binomial_signed(-3, 2)
    6

    :raises TypeError: If the arguments are not integers.
    :param int n: Upper index, any sign.
    :param int k: Lower index.
    :rtype: int
    :return: The signed binomial coefficient, zero when ``k < 0``.
    """
    _check_ints("binomial_signed", n, k)

    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0

    magnitude: int = math.comb(k - n - 1, k)
    return -magnitude if k % 2 else magnitude


def catalan(n: int) -> Count:
    """
    The n-th Catalan number :math:`C_n = \\binom{2n}{n}/(n+1)`, which counts the triangulations of a convex
    (n+2)-gon.

    >>> from polytri.numeric import catalan
    >>> catalan(5)
    42

    :raises TypeError: If n is not an integer.
    :raises ValueError: If n is negative.
    :param int n: The index.
    :rtype: Count
    :return: :math:`C_n`.
    """
    _check_ints("catalan", n)

    if n < 0:
        logger.critical("catalan - Negative Index")
        raise ValueError("Negative Index")

    central: int = math.comb(2 * n, n)
    quotient, remainder = divmod(central, n + 1)

    # The division is always exact.
    assert remainder == 0

    return quotient


def catalan_table(n_max: int) -> list[Count]:
    """
    Catalan numbers :math:`C_0, \\dots, C_{n_{max}}` via :math:`C_{n+1} = C_n \\cdot 2(2n+1)/(n+2)`. An empty list is
    returned for negative ``n_max``.

    :param int n_max: The largest index.
    :rtype: list[Count]
    :return: The table of Catalan numbers.
    """
    _check_ints("catalan_table", n_max)

    table: list[Count] = []
    value: int = 1
    n: int

    for n in range(n_max + 1):
        table.append(value)
        value = value * 2 * (2 * n + 1) // (n + 2)

    return table


def string_poly(r: int) -> IntPoly:
    """
    The choice polynomial of one string with r edges, :math:`\\sum_{\\ell} \\binom{r-\\ell}{\\ell} x^{\\ell}`. The
    coefficient of :math:`x^\\ell` counts the :math:`\\ell`-subsets of the r-1 interior points of a side with no two
    adjacent elements, i.e. the ways to pick :math:`\\ell` pairwise non-crossing essentially forbidden diagonals on
    that side.

    >>> from polytri.numeric import string_poly
    >>> string_poly(4)
    IntPoly(coeffs=(1, 3, 1))

    :raises TypeError: If r is not an integer.
    :raises ValueError: If r is smaller than one.
    :param int r: Number of edges of the string, one more than the number of interior points.
    :rtype: IntPoly
    :return: The string polynomial of degree :math:`\\lfloor r/2 \\rfloor`.
    """
    _check_ints("string_poly", r)

    if r < 1:
        logger.critical("string_poly - Non Positive String Length")
        raise ValueError("String Length Must Be Positive")

    return make_poly(binomial(r - ell, ell) for ell in range(r // 2 + 1))


def chebyshev_u(r: int) -> IntPoly:
    """
    The Chebyshev polynomial of the second kind from :math:`U_0 = 1`, :math:`U_1 = 2x` and
    :math:`U_{r+1} = 2xU_r - U_{r-1}`.

    >>> from polytri.numeric import chebyshev_u
    >>> chebyshev_u(2)
    IntPoly(coeffs=(-1, 0, 4))

    :raises ValueError: If r is negative.
    :param int r: The degree.
    :rtype: IntPoly
    :return: :math:`U_r` as an integer polynomial.
    """
    _check_ints("chebyshev_u", r)

    if r < 0:
        logger.critical("chebyshev_u - Negative Degree")
        raise ValueError("Negative Degree")

    previous: list[int] = [1]
    current: list[int] = [0, 2]

    if r == 0:
        return make_poly(previous)

    step: int
    for step in range(1, r):
        # Multiply by 2x, then subtract the previous polynomial.
        following: list[int] = [0] + [2 * c for c in current]
        for i, c in enumerate(previous):
            following[i] -= c
        previous, current = current, following

    return make_poly(current)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """
    Product of two integer polynomials.
    """
    if not a.coeffs or not b.coeffs:
        return IntPoly(())

    result: list[int] = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            result[i + j] += ca * cb

    return make_poly(result)


def poly_pow(a: IntPoly, e: int) -> IntPoly:
    """
    Non-negative integer power by repeated squaring.

    :raises ValueError: If the exponent is negative.
    """
    _check_ints("poly_pow", e)

    if e < 0:
        logger.critical("poly_pow - Negative Exponent")
        raise ValueError("Negative Exponent")

    result: IntPoly = IntPoly((1,))
    base: IntPoly = a
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)

    return result


def poly_coefficient(a: IntPoly, m: int) -> int:
    """The coefficient of :math:`x^m`, zero out of range."""
    return a.coeffs[m] if 0 <= m < len(a.coeffs) else 0


def poly_eval(a: IntPoly, x: Rational) -> Rational:
    """Horner evaluation at an exact point."""
    value: Rational = 0
    for c in reversed(a.coeffs):
        value = value * x + c
    return value


def a_coeff(k: int, r: int, m: int) -> Count:
    """
    :math:`[x^m]` of the k-th power of :func:`string_poly`. This is the number of ways to choose m pairwise
    non-crossing essentially forbidden diagonals in the balanced configuration with k strings of r edges each.

    >>> from polytri.numeric import a_coeff
    >>> a_coeff(3, 2, 1)
    3

    :raises ValueError: If k or r is smaller than one.
    :param int k: Number of strings.
    :param int r: Edges per string.
    :param int m: Number of chosen diagonals. Out of range values give zero.
    :rtype: Count
    :return: The coefficient.
    """
    _check_ints("a_coeff", k, r, m)

    if k < 1:
        logger.critical("a_coeff - Non Positive String Count")
        raise ValueError("String Count Must Be Positive")

    return poly_coefficient(poly_pow(string_poly(r), k), m)


def series_x(order: int) -> RatSeries:
    """The series x truncated at ``order``."""
    return make_series([0, 1], order)


def series_from_poly(a: IntPoly, order: int) -> RatSeries:
    """A polynomial viewed as a series truncated at ``order``."""
    return make_series(a.coeffs, order)


def series_add(a: RatSeries, b: RatSeries) -> RatSeries:
    """Sum, truncated at the smaller order."""
    order: int = min(a.order, b.order)
    return make_series((a.coeffs[i] + b.coeffs[i] for i in range(order + 1)), order)


def series_scale(a: RatSeries, c: Rational) -> RatSeries:
    """Multiply every coefficient by an exact constant."""
    return make_series((c * v for v in a.coeffs), a.order)


def series_mul(a: RatSeries, b: RatSeries) -> RatSeries:
    """
    Product of two truncated series, truncated at the smaller of the two orders.

    >>> from polytri.numeric import make_series, series_mul
    >>> series_mul(make_series([1, 1], 2), make_series([1, 1], 2)).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(1, 1))

    :param RatSeries a: Left factor.
    :param RatSeries b: Right factor.
    :rtype: RatSeries
    :return: The truncated product.
    """
    order: int = min(a.order, b.order)
    result: list[Fraction] = [Fraction(0)] * (order + 1)

    i: int
    j: int
    for i in range(order + 1):
        ca: Fraction = a.coeffs[i]
        if ca == 0:
            continue
        for j in range(order + 1 - i):
            result[i + j] += ca * b.coeffs[j]

    return RatSeries(tuple(result), order)


def series_inverse(a: RatSeries) -> RatSeries:
    """
    Multiplicative inverse of a series with non-zero constant term.

    :raises ZeroDivisionError: If the constant term is zero.
    """
    if a.coeffs[0] == 0:
        logger.critical("series_inverse - Zero Constant Term")
        raise ZeroDivisionError("Series Not Invertible")

    inverse: list[Fraction] = [1 / a.coeffs[0]]
    n: int
    for n in range(1, a.order + 1):
        acc: Fraction = sum((a.coeffs[j] * inverse[n - j] for j in range(1, n + 1)), Fraction(0))
        inverse.append(-acc / a.coeffs[0])

    return RatSeries(tuple(inverse), a.order)


def series_pow(a: RatSeries, e: int) -> RatSeries:
    """
    Integer power. Negative exponents go through :func:`series_inverse`.
    """
    _check_ints("series_pow", e)

    base: RatSeries = series_inverse(a) if e < 0 else a
    e = abs(e)
    result: RatSeries = make_series([1], a.order)
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)

    return result


def series_compose(a: RatSeries, b: RatSeries) -> RatSeries:
    """
    The composition :math:`a(b(x))` by Horner's scheme. The inner series must have zero constant term, so every
    coefficient of the result up to the smaller order is exact.

    >>> from polytri.numeric import make_series, series_compose
    >>> series_compose(make_series([0, 1, 1], 3), make_series([0, 2], 3)).coeffs
    (Fraction(0, 1), Fraction(2, 1), Fraction(4, 1), Fraction(0, 1))

    :raises ValueError: If the inner series has a non-zero constant term.
    :param RatSeries a: Outer series.
    :param RatSeries b: Inner series.
    :rtype: RatSeries
    :return: The truncated composition.
    """
    # Check that the inner series vanishes at zero.
    if b.coeffs[0] != 0:
        logger.critical("series_compose - Inner Constant Term")
        raise ValueError("Inner Series Has Constant Term")

    order: int = min(a.order, b.order)
    inner: RatSeries = make_series(b.coeffs, order)
    result: RatSeries = make_series([], order)

    for c in reversed(a.coeffs[:order + 1]):
        result = series_mul(result, inner)
        result = make_series((result.coeffs[0] + c,) + result.coeffs[1:], order)

    return result


def series_reversion(a: RatSeries) -> RatSeries:
    """
    The compositional inverse b with :math:`a(b(x)) = x`, by Lagrange inversion
    :math:`[x^n]b = \\frac{1}{n}[t^{n-1}](t/a(t))^n`.

    >>> from polytri.numeric import make_series, series_reversion
    >>> series_reversion(make_series([0, 1, -2, 1], 3)).coeffs
    (Fraction(0, 1), Fraction(1, 1), Fraction(2, 1), Fraction(7, 1))

    :raises ValueError: If the constant term is non-zero.
    :raises ValueError: If the linear term is zero.
    :param RatSeries a: The series to invert, with zero constant and non-zero linear term.
    :rtype: RatSeries
    :return: The reversion at the order of the input.
    """
    # Check the two preconditions of reversion.
    if a.coeffs[0] != 0:
        logger.critical("series_reversion - Non Zero Constant Term")
        raise ValueError("Series Has Constant Term")

    if a.order < 1 or a.coeffs[1] == 0:
        logger.critical("series_reversion - Zero Linear Term")
        raise ValueError("Series Has No Linear Term")

    # phi = t / a(t) is known one order lower than a.
    shifted: RatSeries = make_series(a.coeffs[1:], a.order - 1)
    phi: RatSeries = series_inverse(shifted)

    result: list[Fraction] = [Fraction(0)]
    power: RatSeries = phi
    n: int
    for n in range(1, a.order + 1):
        result.append(power.coeffs[n - 1] / n)
        if n < a.order:
            power = series_mul(power, phi)

    return RatSeries(tuple(result), a.order)
