# License: MIT

import numpy as np
from scipy.special import gammaln, gammaincc

from qhrand.utils.constants import IGAMC_EPS, IGAMC_MAX_ITER, IGAMC_TINY
from qhrand.utils.exceptions import DomainError, ConvergenceError
from qhrand.utils.logging_utils import get_logger

logger = get_logger(__name__)


def _max_iter(a):
    # both expansions need on the order of sqrt(a) terms near x = a
    return IGAMC_MAX_ITER + int(10.0 * np.sqrt(a))


def _prefactor(a, x):
    # x^a e^-x / Gamma(a), in log space
    return np.exp(-x + a * np.log(x) - gammaln(a))


def _lower_series(a, x):
    """Regularized lower gamma P(a, x) by its power series; converges fast for x < a + 1."""
    ap = a
    delta = total = 1.0 / a
    for _ in range(_max_iter(a)):
        ap += 1.0
        delta *= x / ap
        total += delta
        if abs(delta) < abs(total) * IGAMC_EPS:
            return total * _prefactor(a, x)
    raise ConvergenceError('igamc series did not converge for a=%g, x=%g!' % (a, x))


def _upper_continued_fraction(a, x):
    """Regularized upper gamma Q(a, x) by modified Lentz evaluation; used for x >= a + 1."""
    b = x + 1.0 - a
    c = 1.0 / IGAMC_TINY
    d = 1.0 / b
    h = d
    for i in range(1, _max_iter(a) + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < IGAMC_TINY:
            d = IGAMC_TINY
        c = b + an / c
        if abs(c) < IGAMC_TINY:
            c = IGAMC_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < IGAMC_EPS:
            return h * _prefactor(a, x)
    raise ConvergenceError('igamc continued fraction did not converge for a=%g, x=%g!' % (a, x))


def igamc(a, x) -> float:
    """Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x) / Gamma(a)."""
    a = float(a)
    x = float(x)
    if a <= 0 or x < 0 or np.isnan(a) or np.isnan(x):
        raise DomainError('igamc needs a > 0 and x >= 0, got a=%g, x=%g!' % (a, x))
    if x == 0:
        return 1.0
    try:
        if x < a + 1.0:
            q = 1.0 - _lower_series(a, x)
        else:
            q = _upper_continued_fraction(a, x)
    except ConvergenceError as e:
        logger.debug('%s Falling back to scipy.special.gammaincc.', e)
        q = gammaincc(a, x)
    return float(min(1.0, max(0.0, q)))
