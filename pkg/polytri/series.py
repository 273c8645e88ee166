"""
Generating functions of the balanced counts. The algebraic ones are evaluated numerically from the small roots of a
polynomial family and compared with exact truncated series; the k = 3 generating function in r is checked exactly
through the series g with :math:`g(1-g)^2 = x`.

+--------------------------------------+-------------------------------------------------------------------+
| function                             | purpose                                                           |
+======================================+===================================================================+
| :func:`.p_poly`                      | Coefficients of :math:`P_r(x;t)` for a numeric x.                 |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.small_roots`                 | Roots of a family tagged small or large by continuation from 0.   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.vertical_gf_eval`            | :math:`\\sum_k tr(k,r) x^k` from the small roots of P_r.           |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.horizontal_gf_eval`          | :math:`\\sum_r tr(k,r) x^r` from the small roots of Q_{j,k}.       |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.g_series`                    | Exact series of g with :math:`g(1-g)^2 = x`.                      |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.van_hoeij_series`            | Exact generating function of tr(3, r).                            |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.vertical_series`             | Truncated exact series in k for a fixed r.                        |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.horizontal_series`           | Truncated exact series in r for a fixed k.                        |
+--------------------------------------+-------------------------------------------------------------------+

"""
import logging
from fractions import Fraction
from typing import NamedTuple
from collections.abc import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import linear_sum_assignment

from polytri.counting import CrossCheckError, tr_kernel, tr_method
from polytri.numeric import (IntPoly, RatSeries, binomial, make_poly, make_series, poly_mul, poly_pow,
                             series_add, series_compose, series_inverse, series_mul, series_reversion, series_x,
                             series_scale)

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.series")

RESIDUAL_TOLERANCE: float = 1e-12
"""Largest accepted backward error of a polished root."""

SYMMETRY_TOLERANCE: float = 1e-8
"""Largest accepted distance between the mirror image of a small root of ``P_r`` and the nearest large root."""

GUARD: float = 0.5
"""Fraction of the convergence radius inside which the generating functions are evaluated."""

FAMILIES: tuple[str, ...] = ("vertical", "horizontal", "van_hoeij")


class RootSeparationError(ArithmeticError):
    """The small and large roots could not be told apart along the continuation path."""


class RootFamily(NamedTuple):
    """
    The roots in t of ``P_r`` (``kind="P"``, ``params=(r,)``) or of
    :math:`Q_{j,k}(x;t) = t^{k-j}(1-t)^j - x` (``kind="Q"``, ``params=(j, k)``) at the point x. An empty family
    has no roots yet; :func:`small_roots` fills them.
    """
    kind: str
    params: tuple[int, ...]
    x: complex
    roots: tuple[complex, ...] = ()
    small: tuple[bool, ...] = ()
    residual: float = 0.0

    def small_values(self) -> list[complex]:
        """The roots tending to zero with x."""
        return [t for t, is_small in zip(self.roots, self.small) if is_small]


class SeriesWindow(NamedTuple):
    """Exact coefficients of one generating function up to ``order``."""
    family: str
    param: int
    order: int
    coeffs: tuple[Fraction, ...]

    def evaluate(self, x: complex) -> complex:
        """The truncated sum at x."""
        return complex(sum(float(c) * x ** m for m, c in enumerate(self.coeffs) if c))


def _exact_halving_division(numerator: IntPoly) -> IntPoly:
    """
    Divides by :math:`1-2t` exactly.

    :raises ArithmeticError: If there is a remainder.
    """
    coeffs: tuple[int, ...] = numerator.coeffs
    quotient: list[int] = []
    for i in range(len(coeffs) - 1):
        quotient.append(coeffs[i] + 2 * (quotient[i - 1] if i else 0))

    if coeffs[-1] != -2 * quotient[-1]:
        logger.critical("_exact_halving_division - Non Zero Remainder")
        raise ArithmeticError("Not Divisible By 1 - 2t")

    return make_poly(quotient)


def p_poly_parts(r: int) -> tuple[IntPoly, IntPoly]:
    """
    The two integer polynomials with :math:`P_r(x;t) = A(t) - x B(t)`, namely :math:`A = t^r(1-t)^r` and
    :math:`B = ((1-t)^{r+1}-t^{r+1})/(1-2t)`.

    >>> from polytri.series import p_poly_parts
    >>> p_poly_parts(2)
    (IntPoly(coeffs=(0, 0, 1, -2, 1)), IntPoly(coeffs=(1, -1, 1)))

    :raises ValueError: If r < 2.
    """
    if not isinstance(r, int) or r < 2:
        logger.critical("p_poly_parts - Need r >= 2")
        raise ValueError("Need r >= 2")

    one_minus_t: IntPoly = make_poly([1, -1])
    a: IntPoly = poly_mul(make_poly([0] * r + [1]), poly_pow(one_minus_t, r))

    side: list[int] = list(poly_pow(one_minus_t, r + 1).coeffs)
    side[r + 1] -= 1
    b: IntPoly = _exact_halving_division(make_poly(side))

    return a, b


def p_poly(r: int, x: complex) -> np.ndarray:
    """
    Complex coefficients of :math:`P_r(x;t)`, ascending in t.

    :param int r: Edges per side, at least 2.
    :param complex x: The evaluation point.
    :rtype: numpy.ndarray
    :return: 2r+1 coefficients.
    """
    a, b = p_poly_parts(r)
    coeffs: np.ndarray = np.zeros(2 * r + 1, dtype=complex)
    coeffs[:len(a.coeffs)] += np.array(a.coeffs, dtype=float)
    coeffs[:len(b.coeffs)] -= x * np.array(b.coeffs, dtype=float)
    return coeffs


def q_poly(j: int, k: int, x: complex) -> np.ndarray:
    """Complex coefficients of :math:`t^{k-j}(1-t)^j - x`, ascending in t."""
    base: IntPoly = poly_mul(make_poly([0] * (k - j) + [1]), poly_pow(make_poly([1, -1]), j))
    coeffs: np.ndarray = np.array(base.coeffs, dtype=complex)
    coeffs[0] -= x
    return coeffs


def _family_poly(kind: str, params: tuple[int, ...]) -> tuple[Callable[[complex], np.ndarray], int]:
    """The coefficient builder of a family and its number of small roots."""
    if kind == "P":
        r: int = params[0]
        return (lambda x: p_poly(r, x)), r
    if kind == "Q":
        j, k = params
        return (lambda x: q_poly(j, k, x)), k - j

    logger.critical("_family_poly - Unknown Family " + str(kind))
    raise ValueError("Unknown Root Family " + str(kind))


def _solve(coeffs: np.ndarray) -> np.ndarray:
    # np.roots wants the leading coefficient first.
    return np.roots(coeffs[::-1])


def _polish(coeffs: np.ndarray, roots: np.ndarray, iterations: int = 3) -> np.ndarray:
    """A few Newton steps on the target polynomial."""
    derivative: np.ndarray = npoly.polyder(coeffs)
    polished: np.ndarray = roots.copy()
    for _ in range(iterations):
        slope: np.ndarray = npoly.polyval(polished, derivative)
        step: np.ndarray = np.where(slope != 0, npoly.polyval(polished, coeffs) / np.where(slope != 0, slope, 1), 0)
        polished = polished - step
    return polished


def backward_error(coeffs: np.ndarray, roots: np.ndarray) -> float:
    """Largest :math:`|p(t)| / \\sum_i |c_i||t|^i` over the roots."""
    if len(roots) == 0:
        return 0.0
    value: np.ndarray = np.abs(npoly.polyval(roots, coeffs))
    scale: np.ndarray = npoly.polyval(np.abs(roots), np.abs(coeffs))
    return float(np.max(value / scale))


def small_roots(family: RootFamily, steps: int = 64) -> RootFamily:
    """
    Finds every root of the family at ``family.x`` and tags the ones tending to 0 as x tends to 0.

    The roots are first computed at :math:`10^{-6} x`, where the small ones sit next to 0 and the large ones next to 1,
    and then followed along a geometric path to x. Consecutive root sets are matched by a minimum cost assignment.
    A step that moves some root by more than half the smallest gap between roots is refused.

    >>> from polytri.series import RootFamily, small_roots
    >>> len(small_roots(RootFamily("P", (3,), 0.001)).small_values())
    3

    :raises RootSeparationError: If the clusters cannot be separated or a root fails its residual check.
    :raises CrossCheckError: If the roots of ``P_r`` are not closed under :math:`t \\mapsto 1-t`.
    :param RootFamily family: The family and evaluation point.
    :param int steps: Number of continuation steps.
    :rtype: RootFamily
    :return: The family with roots, small tags and the largest backward error.
    """
    build, expected = _family_poly(family.kind, family.params)
    x: complex = complex(family.x)

    if x == 0:
        start: np.ndarray = _solve(build(0j))
        tags: np.ndarray = np.abs(start) < np.abs(start - 1)
        return family._replace(roots=tuple(complex(t) for t in start), small=tuple(bool(v) for v in tags))

    path: np.ndarray = np.geomspace(1e-6, 1.0, steps)
    roots: np.ndarray = _solve(build(x * path[0]))
    tags = np.abs(roots) < np.abs(roots - 1)

    # Check that the clusters are separated at the start of the path.
    if int(tags.sum()) != expected:
        logger.critical(f"small_roots - Found {int(tags.sum())} Small Roots Instead Of {expected}")
        raise RootSeparationError("Small Roots Not Separated At Start")

    for fraction in path[1:]:
        found: np.ndarray = _solve(build(x * fraction))
        cost: np.ndarray = np.abs(roots[:, None] - found[None, :])
        rows, cols = linear_sum_assignment(cost)

        gaps: np.ndarray = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(gaps, np.inf)
        if len(roots) > 1 and cost[rows, cols].max() > 0.5 * gaps.min():
            logger.critical(f"small_roots - Clusters Collide At x={x * fraction}")
            raise RootSeparationError("Root Clusters Collide, |x| Too Large")

        roots = found[cols[np.argsort(rows)]]

    target: np.ndarray = build(x)
    roots = _polish(target, roots)
    residual: float = backward_error(target, roots)

    if residual > RESIDUAL_TOLERANCE:
        logger.critical(f"small_roots - Residual {residual} Too Large")
        raise RootSeparationError("Root Residual Above Tolerance")

    result: RootFamily = family._replace(
        roots=tuple(complex(t) for t in roots), small=tuple(bool(v) for v in tags), residual=residual
    )

    # P_r is invariant under t -> 1-t.
    if family.kind == "P":
        defect: float = symmetry_defect(result)
        if defect > SYMMETRY_TOLERANCE:
            logger.critical(f"small_roots - Symmetry Defect {defect}")
            raise CrossCheckError("Roots Not Closed Under t -> 1-t")

    logger.debug(f"small_roots - {family.kind}{family.params} at x={x}: residual {residual:.2e}")
    return result


def symmetry_defect(family: RootFamily) -> float:
    """
    How far the roots of ``P_r`` are from being closed under :math:`t \\mapsto 1-t`, each small root mapping to a
    large one.
    """
    roots: np.ndarray = np.array(family.roots)
    large: np.ndarray = roots[~np.array(family.small)]
    return float(max((np.abs(large - (1 - t)).min() for t in family.small_values()), default=0.0))


def convergence_radius(family: str, param: int) -> float:
    """
    Radius of convergence of the vertical series in k (:math:`1/(2^r(r+1))`) or the horizontal series in r
    (:math:`2^{-k}`).

    :raises ValueError: If the family is neither vertical nor horizontal.
    """
    if family == "vertical":
        return 1.0 / (2 ** param * (param + 1))
    if family == "horizontal":
        return 2.0 ** -param

    logger.critical("convergence_radius - Unknown Family " + str(family))
    raise ValueError("Unknown Family " + str(family))


def _check_guard(func: str, family: str, param: int, x: complex) -> None:
    if abs(x) > GUARD * convergence_radius(family, param):
        logger.critical(func + f" - |x| = {abs(x)} Outside Guard")
        raise ValueError("Outside Convergence Guard")


def vertical_gf_eval(r: int, x: complex) -> complex:
    """
    :math:`\\sum_{k \\geq 1} tr(k,r) x^k` as
    :math:`-\\frac12 \\sum_i t_i^r(1-t_i)^r(1-2t_i)^2 / \\partial_t P_r(x;t_i)` over the r small roots of
    :math:`P_r`. The k = 1 term is the kernel coefficient from :func:`polytri.counting.tr_kernel`.

    >>> from polytri.series import vertical_gf_eval
    >>> round(vertical_gf_eval(2, 0.0).real, 12)
    0.0

    :raises ValueError: If r < 2 or x is outside the guard.
    :raises RootSeparationError: If the small roots cannot be found.
    :param int r: Edges per side.
    :param complex x: The evaluation point.
    :rtype: complex
    :return: The generating function at x.
    """
    if not isinstance(r, int) or r < 2:
        logger.critical("vertical_gf_eval - Need r >= 2")
        raise ValueError("Need r >= 2")

    if x == 0:
        return 0j

    _check_guard("vertical_gf_eval", "vertical", r, x)

    family: RootFamily = small_roots(RootFamily("P", (r,), x))
    derivative: np.ndarray = npoly.polyder(p_poly(r, x))

    total: complex = 0j
    for t in family.small_values():
        total += t ** r * (1 - t) ** r * (1 - 2 * t) ** 2 / npoly.polyval(t, derivative)

    return -total / 2


def horizontal_gf_eval(k: int, x: complex) -> complex:
    """
    :math:`\\sum_{r \\geq 1} tr(k,r) x^r` as :math:`-\\frac12 \\sum_{j=0}^{k} (-1)^j \\binom{k}{j}
    \\sum_i t_{i,j}^{j+1}(1-t_{i,j})^{k-j+1} / ((1-2t_{i,j})^{k-2}(k-j-kt_{i,j}))`, the inner sum running over the
    k-j small roots of :math:`Q_{j,k}`. For j = k there are none.

    :raises ValueError: If k < 2 or x is outside the guard.
    :raises RootSeparationError: If the small roots cannot be found.
    :param int k: Number of corners.
    :param complex x: The evaluation point.
    :rtype: complex
    :return: The generating function at x.
    """
    if not isinstance(k, int) or k < 2:
        logger.critical("horizontal_gf_eval - Need k >= 2")
        raise ValueError("Need k >= 2")

    if x == 0:
        return 0j

    _check_guard("horizontal_gf_eval", "horizontal", k, x)

    total: complex = 0j
    j: int
    for j in range(k):
        inner: complex = 0j
        for t in small_roots(RootFamily("Q", (j, k), x)).small_values():
            inner += t ** (j + 1) * (1 - t) ** (k - j + 1) / ((1 - 2 * t) ** (k - 2) * (k - j - k * t))
        total += (-1) ** j * binomial(k, j) * inner

    return -total / 2


def vertical_gf_closed_r2(x: complex) -> complex:
    """
    The r = 2 vertical generating function in radicals,
    :math:`\\frac18\\sqrt{\\frac{x}{x+4}}\\left[\\sqrt{1+2x+2\\sqrt{x(x+4)}}(\\sqrt x+\\sqrt{x+4})^2 -
    \\sqrt{1+2x-2\\sqrt{x(x+4)}}(\\sqrt x-\\sqrt{x+4})^2\\right]`.
    """
    x = complex(x)
    root_x: complex = np.sqrt(x)
    root_x4: complex = np.sqrt(x + 4)
    cross: complex = np.sqrt(x * (x + 4))

    bracket: complex = (np.sqrt(1 + 2 * x + 2 * cross) * (root_x + root_x4) ** 2
                        - np.sqrt(1 + 2 * x - 2 * cross) * (root_x - root_x4) ** 2)
    return complex(np.sqrt(x / (x + 4)) * bracket / 8)


def g_series(order: int) -> RatSeries:
    """
    The series g with :math:`g(1-g)^2 = x`, by reversion of :math:`t - 2t^2 + t^3`. Its n-th coefficient is
    :math:`\\frac1n\\binom{3n-2}{n-1}`.

    >>> from polytri.series import g_series
    >>> [int(c) for c in g_series(4).coeffs]
    [0, 1, 2, 7, 30]
    """
    if not isinstance(order, int) or order < 1:
        logger.critical("g_series - Order Below One")
        raise ValueError("Order Must Be Positive")

    return series_reversion(make_series([0, 1, -2, 1], order))


def _poly_of(coeffs: list[int], inner: RatSeries) -> RatSeries:
    return series_compose(make_series(coeffs, inner.order), inner)


def hoeij_identity(order: int) -> bool:
    """Whether :math:`(2g-1)(4g^2-6g+1) = 8x-1` holds to the given order."""
    g: RatSeries = g_series(order)
    left: RatSeries = series_mul(_poly_of([-1, 2], g), _poly_of([1, -6, 4], g))
    return left == make_series([-1, 8], order)


def van_hoeij_series(order: int) -> RatSeries:
    """
    :math:`x^2 F(g(x))` with :math:`F(g) = (10g^3-17g^2+7g-1)/((1-3g)(2g-1)(4g^2-6g+1))`. The coefficient of
    :math:`x^r` is tr(3, r-1) for r at least 2.

    >>> from polytri.series import van_hoeij_series
    >>> [int(c) for c in van_hoeij_series(7).coeffs]
    [0, 0, 1, 4, 29, 229, 1847, 14974]

    :raises ValueError: If order < 2.
    :param int order: Truncation order.
    :rtype: RatSeries
    :return: The exact truncated series.
    """
    if not isinstance(order, int) or order < 2:
        logger.critical("van_hoeij_series - Order Below Two")
        raise ValueError("Order Must Be At Least 2")

    inner_order: int = max(order - 2, 1)
    g: RatSeries = g_series(inner_order)

    numerator: RatSeries = _poly_of([-1, 7, -17, 10], g)
    denominator: RatSeries = series_mul(
        series_mul(_poly_of([1, -3], g), _poly_of([-1, 2], g)), _poly_of([1, -6, 4], g)
    )
    value: RatSeries = series_mul(numerator, series_inverse(denominator))

    return make_series([0, 0] + list(value.coeffs[:order - 1]), order)


def vertical_series(r: int, order: int) -> SeriesWindow:
    """Exact :math:`\\sum_{k=1}^{order} tr(k,r)x^k`; the k = 1 coefficient is the kernel value."""
    coeffs: list[Fraction] = [Fraction(0)]
    if order >= 1:
        coeffs.append(tr_kernel(1, r))
    coeffs.extend(Fraction(tr_method(k, r)) for k in range(2, order + 1))
    return SeriesWindow("vertical", r, order, tuple(coeffs))


def horizontal_series(k: int, order: int) -> SeriesWindow:
    """Exact :math:`\\sum_{r=1}^{order} tr(k,r)x^r`."""
    coeffs: list[Fraction] = [Fraction(0)] + [Fraction(tr_method(k, r)) for r in range(1, order + 1)]
    return SeriesWindow("horizontal", k, order, tuple(coeffs))


def van_hoeij_window(order: int) -> SeriesWindow:
    """The van Hoeij coefficients together with the exact counts they should reproduce."""
    return SeriesWindow("van_hoeij", 3, order, van_hoeij_series(order).coeffs)


def gf_check(family: str, param: int, x: complex, order: int) -> tuple[complex, complex, float]:
    """
    Evaluates a generating function at x and compares it with its truncated exact series.

    :rtype: tuple[complex, complex, float]
    :return: The root based value, the truncated sum and their absolute difference.
    """
    if family == "vertical":
        value: complex = vertical_gf_eval(param, x)
        window: SeriesWindow = vertical_series(param, order)
    elif family == "horizontal":
        value = horizontal_gf_eval(param, x)
        window = horizontal_series(param, order)
    else:
        logger.critical("gf_check - Unknown Family " + str(family))
        raise ValueError("Unknown Family " + str(family))

    truncated: complex = window.evaluate(x)
    return value, truncated, abs(value - truncated)


def identity_check(order: int) -> RatSeries:
    """:math:`g(1-g)^2 - x`, which must vanish to the given order."""
    g: RatSeries = g_series(order)
    one_minus_g: RatSeries = series_add(make_series([1], order), series_scale(g, -1))
    return series_add(series_mul(g, series_mul(one_minus_g, one_minus_g)), series_scale(series_x(order), -1))
