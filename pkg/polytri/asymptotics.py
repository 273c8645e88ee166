"""
Asymptotic estimates of the counts and the numerical checks behind them. Estimates are carried as natural logarithms
because the counts leave double precision long before the estimates become accurate.

+--------------------------------------+-------------------------------------------------------------------+
| function                             | purpose                                                           |
+======================================+===================================================================+
| :func:`.sine_integral`               | Exact multiple of pi equal to the sine integral of order k.       |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.sine_integral_quad`          | The same integral by oscillatory quadrature.                      |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.asympt_r_to_inf`             | Estimate of tr(k,r) for fixed k and large r.                      |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.asympt_k_to_inf`             | Estimate of tr(k,r) for large k.                                  |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.asympt_partial`              | Estimate of the partially subdivided count for s = alpha N.       |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.growth_factor`               | Per point growth of the indented configuration, real r allowed.   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.quadrature_check`            | Integral representation of tr(k,r) against the exact count.       |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.quadrature_check_partial`    | Integral representation of the partial count against the exact.   |
+--------------------------------------+-------------------------------------------------------------------+

"""
import functools
import logging
import math
from fractions import Fraction
from typing import NamedTuple
from collections.abc import Callable

import mpmath
import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize_scalar
from scipy.special import gammaln

from polytri.counting import PartialParams, SubdivisionParams, partial_count, tr_method
from polytri.numeric import Count, binomial

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.asymptotics")

QUADRATURE_LIMIT: int = 30
"""Largest number of points for which the integral representations are evaluated in double precision."""


class QuadratureError(ArithmeticError):
    """An integral did not converge to the requested accuracy."""


class PiMultiple(NamedTuple):
    """The number ``coefficient * pi``."""
    coefficient: Fraction

    @property
    def value(self) -> float:
        return float(self.coefficient) * math.pi


class AsymptoticEstimate(NamedTuple):
    """An estimate stored as its natural logarithm, with the exponential growth base it carries."""
    log_value: float
    growth_base: float
    params: tuple[float, ...]

    @property
    def value(self) -> float:
        """The estimate itself; infinite once it overflows."""
        return math.exp(self.log_value) if self.log_value < 709 else math.inf


class GrowthPoint(NamedTuple):
    """The growth factor g at a (possibly real) string length r."""
    r: float
    g: float


def log_ratio(exact: Count, estimate: AsymptoticEstimate) -> float:
    """:math:`\\log(exact/estimate)`, computed without forming either number as a float."""
    if exact <= 0:
        logger.critical("log_ratio - Non Positive Count")
        raise ValueError("Count Must Be Positive")
    return math.log(exact) - estimate.log_value


def ratio(exact: Count, estimate: AsymptoticEstimate) -> float:
    """exact / estimate."""
    return math.exp(log_ratio(exact, estimate))


@functools.lru_cache(maxsize=None)
def _sine_power(lam: int, p: int) -> Fraction:
    """
    :math:`\\frac{1}{\\pi}\\int_0^\\infty \\sin^\\lambda x / x^p\\, dx` for :math:`\\lambda \\geq p \\geq 1` of equal
    parity, reduced two steps at a time in both the power and the exponent.
    """
    if p == 1:
        m: int = (lam + 1) // 2
        return Fraction(binomial(2 * m - 2, m - 1), 2 * 4 ** (m - 1))

    if p == 2:
        m = lam // 2
        return Fraction(lam * binomial(2 * m - 2, m - 1), 2 * 4 ** (m - 1) * 2 * m)

    scale: int = (p - 1) * (p - 2)
    return (Fraction(lam * (lam - 1), scale) * _sine_power(lam - 2, p - 2)
            - Fraction(lam * lam, scale) * _sine_power(lam, p - 2))


def sine_integral(k: int) -> PiMultiple:
    """
    :math:`\\int_{-\\infty}^{\\infty} \\sin^k(2u)/u^{k-2}\\, du` as an exact multiple of pi. The substitution
    :math:`v = 2u` turns it into :math:`2^{k-2}\\int_0^\\infty \\sin^k v / v^{k-2}\\, dv`, which the reduction
    formula brings down to the two Wallis type initial integrals.

    >>> from polytri.asymptotics import sine_integral
    >>> sine_integral(3)
    PiMultiple(coefficient=Fraction(1, 2))
    >>> sine_integral(4)
    PiMultiple(coefficient=Fraction(1, 1))

    :raises ValueError: If k < 3.
    :param int k: The power of the sine.
    :rtype: PiMultiple
    :return: The integral.
    """
    if not isinstance(k, int) or isinstance(k, bool):
        logger.critical("sine_integral - Incorrect Input Type")
        raise TypeError("k Not An Integer")

    if k < 3:
        logger.critical("sine_integral - Need k >= 3")
        raise ValueError("Need k >= 3")

    return PiMultiple(2 ** (k - 2) * _sine_power(k, k - 2))


def sine_integral_quad(k: int) -> float:
    """The sine integral by :func:`mpmath.quadosc`, used as an oracle for :func:`sine_integral`."""
    if k < 3:
        logger.critical("sine_integral_quad - Need k >= 3")
        raise ValueError("Need k >= 3")

    with mpmath.workdps(25):
        half: mpmath.mpf = mpmath.quadosc(
            lambda u: mpmath.sin(2 * u) ** k / u ** (k - 2), [0, mpmath.inf], period=mpmath.pi
        )
        return float(2 * half)


def asympt_r_to_inf(k: int, r: int) -> AsymptoticEstimate:
    """
    :math:`tr(k,r) \\sim 2^{(r-1)k} r^{k-3} \\frac{1}{\\pi}\\int_{-\\infty}^{\\infty}\\sin^k(2u)/u^{k-2}\\,du`
    for fixed k as r grows.

    >>> from polytri.asymptotics import asympt_r_to_inf
    >>> round(asympt_r_to_inf(3, 5).value)
    2048

    :raises ValueError: If k < 3 or r < 1.
    """
    if k < 3 or r < 1:
        logger.critical("asympt_r_to_inf - Out Of Range")
        raise ValueError("Need k >= 3 And r >= 1")

    coefficient: Fraction = sine_integral(k).coefficient
    log_value: float = ((r - 1) * k * math.log(2) + (k - 3) * math.log(r)
                        + math.log(coefficient.numerator) - math.log(coefficient.denominator))
    return AsymptoticEstimate(log_value, 2.0 ** k, (k, r))


def asympt_k_to_inf(k: int, r: int) -> AsymptoticEstimate:
    """
    :math:`tr(k,r) \\sim (2^r(r+1))^k / (16\\sqrt{\\pi} R^{3/2} k^{3/2})` with :math:`R = r(r+5)/6`, valid whether or
    not r stays fixed.

    :raises ValueError: If k < 3 or r < 1.
    """
    if k < 3 or r < 1:
        logger.critical("asympt_k_to_inf - Out Of Range")
        raise ValueError("Need k >= 3 And r >= 1")

    big_r: float = r * (r + 5) / 6
    base: float = 2.0 ** r * (r + 1)
    log_value: float = (k * (r * math.log(2) + math.log(r + 1)) - math.log(16 * math.sqrt(math.pi))
                        - 1.5 * math.log(big_r) - 1.5 * math.log(k))
    return AsymptoticEstimate(log_value, base, (k, r))


def asympt_partial(N: int, alpha: float) -> AsymptoticEstimate:
    """
    :math:`(4^{1-\\alpha}3^\\alpha)^N / (16\\sqrt{\\pi}(1+\\alpha/3)^{3/2}N^{3/2})` for N points of which
    :math:`\\alpha N` sides carry one subdivision point.

    :raises ValueError: If alpha is outside [0, 1/2] or N < 3.
    """
    if not 0 <= alpha <= 0.5:
        logger.critical("asympt_partial - Alpha Out Of Range")
        raise ValueError("Need 0 <= alpha <= 1/2")

    if N < 3:
        logger.critical("asympt_partial - Too Few Points")
        raise ValueError("Too Few Points")

    log_base: float = (1 - alpha) * math.log(4) + alpha * math.log(3)
    log_value: float = (N * log_base - math.log(16 * math.sqrt(math.pi))
                        - 1.5 * math.log(1 + alpha / 3) - 1.5 * math.log(N))
    return AsymptoticEstimate(log_value, math.exp(log_base), (N, alpha))


def _log_growth(r: float) -> float:
    return math.log(2) + (math.log(r + 1) + gammaln(2 * r - 1) - gammaln(r) - gammaln(r + 1)) / r


def growth_factor(r: float) -> GrowthPoint:
    """
    :math:`g_r = 2(r+1)^{1/r}C_{r-1}^{1/r}`, extended to real r through the Gamma function.

    >>> from polytri.asymptotics import growth_factor
    >>> round(growth_factor(2).g ** 2, 9)
    12.0

    :raises ValueError: If r < 1.
    """
    if r < 1:
        logger.critical("growth_factor - Need r >= 1")
        raise ValueError("Need r >= 1")

    return GrowthPoint(float(r), math.exp(_log_growth(float(r))))


def isc_growth(r: float) -> float:
    """Per point growth of the indented configuration as k grows; tends to 8 as r grows."""
    return growth_factor(r).g


def sc_growth_r(k: int) -> float:
    """Growth of tr(k,r) per unit of r for fixed k, which is 2 per point."""
    return 2.0 ** k


def growth_table(r_min: float, r_max: float, step: float) -> list[GrowthPoint]:
    """Growth factors on an evenly spaced grid, both ends included."""
    if r_min < 1 or r_max < r_min or step <= 0:
        logger.critical("growth_table - Bad Grid")
        raise ValueError("Need 1 <= r_min <= r_max And step > 0")

    count: int = int(math.floor((r_max - r_min) / step + 1e-9)) + 1
    return [growth_factor(r_min + i * step) for i in range(count)]


def growth_argmin_integer(r_max: int) -> int:
    """The integer string length in [1, r_max] with the smallest growth factor."""
    return min(range(1, r_max + 1), key=_log_growth)


def growth_argmin_real(bracket: tuple[float, float, float] = (1.0, 1.5, 3.0)) -> float:
    """
    The real minimizer of the growth factor by golden section search. The search only runs once finite differences
    on a grid over the bracket change sign exactly once.

    :raises ArithmeticError: If the growth factor is not unimodal on the bracket.
    """
    grid: np.ndarray = np.linspace(bracket[0], bracket[2], 100)
    slopes: np.ndarray = np.sign(np.diff([_log_growth(r) for r in grid]))
    changes: int = int(np.count_nonzero(np.diff(slopes)))

    if changes != 1:
        logger.critical(f"growth_argmin_real - {changes} Slope Changes")
        raise ArithmeticError("Growth Factor Not Unimodal On Bracket")

    result = minimize_scalar(_log_growth, bracket=bracket, method="golden", tol=1e-8)
    logger.debug(f"growth_argmin_real - minimum at r={result.x:.6f}")
    return float(result.x)


def _integrate(func: Callable[[float], float], upper: float, where: str) -> float:
    """Adaptive quadrature on [0, upper] with a convergence check."""
    value, error = quad(func, 0.0, upper, limit=400, epsabs=1e-12, epsrel=1e-12)
    if error > 1e-8 * max(1.0, abs(value)):
        logger.critical(f"{where} - Quadrature Error {error}")
        raise QuadratureError("Quadrature Did Not Converge")
    return value


def tr_integral(k: int, r: int) -> float:
    """
    The real line representation :math:`\\frac{2^{(r-1)k}}{\\pi}\\int_{-\\infty}^{\\infty}
    \\sin^k((r+1)\\arctan 2u)\\,(1+4u^2)^{(1-r)k/2}u^{2-k}\\,du` of tr(k,r). With :math:`u = \\tan(\\theta)/2` it
    becomes :math:`\\frac{2^{rk-2}}{\\pi}\\int_0^{\\pi/2} U_r(\\cos\\theta)^k \\sin^2\\theta
    \\cos^{rk-4}\\theta\\,d\\theta`, where :math:`U_r(\\cos\\theta) = \\sin((r+1)\\theta)/\\sin\\theta` stays bounded.

    :raises ValueError: If the parameters are out of range or there are more than 30 points.
    :raises QuadratureError: If the integral does not converge.
    """
    SubdivisionParams(k, r).validate()

    if k * r > QUADRATURE_LIMIT:
        logger.critical("tr_integral - Too Many Points")
        raise ValueError("At Most 30 Points")

    def integrand(theta: float) -> float:
        s: float = math.sin(theta)
        c: float = math.cos(theta)
        u: float = math.sin((r + 1) * theta) / s if s else float(r + 1)
        return u ** k * s * s * c ** (r * k - 4) if c else 0.0

    return 2.0 ** (r * k - 2) / math.pi * _integrate(integrand, math.pi / 2, "tr_integral")


def quadrature_check(k: int, r: int) -> float:
    """
    Relative error of :func:`tr_integral` against the exact count.

    >>> from polytri.asymptotics import quadrature_check
    >>> quadrature_check(3, 2) < 1e-6
    True
    """
    exact: Count = tr_method(k, r)
    value: float = tr_integral(k, r)
    logger.debug(f"quadrature_check - k={k} r={r}: {value} against {exact}")
    return abs(value - exact) / exact


def partial_integral(N: int, s: int) -> float:
    """
    :math:`\\frac{4^{N-s}3^s}{\\pi}\\int_{-\\infty}^{\\infty} u^2(1-\\tfrac43u^2)^s/(1+4u^2)^N\\,du`, integrated as
    :math:`\\frac{4^{N-s}3^s}{4\\pi}\\int_0^{\\pi/2}\\sin^2\\theta\\cos^{2N-2s-4}\\theta
    (\\cos^2\\theta-\\tfrac13\\sin^2\\theta)^s\\,d\\theta` after :math:`u = \\tan(\\theta)/2`.
    """
    PartialParams(N, s).validate()

    if N > QUADRATURE_LIMIT:
        logger.critical("partial_integral - Too Many Points")
        raise ValueError("At Most 30 Points")

    def integrand(theta: float) -> float:
        s2: float = math.sin(theta) ** 2
        c2: float = math.cos(theta) ** 2
        return s2 * c2 ** (N - s - 2) * (c2 - s2 / 3) ** s

    return 4.0 ** (N - s) * 3.0 ** s / (4 * math.pi) * _integrate(integrand, math.pi / 2, "partial_integral")


def quadrature_check_partial(N: int, s: int) -> float:
    """Relative error of :func:`partial_integral` against :func:`polytri.counting.partial_count`."""
    exact: Count = partial_count(N, s)
    return abs(partial_integral(N, s) - exact) / exact
