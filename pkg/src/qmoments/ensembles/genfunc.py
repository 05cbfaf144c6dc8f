'''
Generating functions in ``N`` of the density moments: direct series built
from oracle moments and the product and partial fraction forms they are
compared with.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from qmoments.ensembles import weights
from qmoments.ensembles.density import density_moment_oracle
from qmoments.exact_algebra import Q, S
from qmoments.q_operators.series import FormalSeries
from qmoments.q_special import qpochhammer
from qmoments.util import ConfigError
from qmoments.util.math import double_factorial


logger = logging.getLogger(__name__)


def _linear(constant, slope, order):
    '''
    The series ``constant + slope z``.
    '''
    return FormalSeries([constant, slope], order)


def _pochhammer_series(start, base, count, order):
    '''
    ``(start z; base)_count`` as a truncated series in ``z``.
    '''
    result = FormalSeries.one(order)
    factor = start
    for _ in range(count):
        result = result * _linear(1, -factor, order)
        factor = factor * base
    return result


def direct_series(weight, k, order, route='schur_sum'):
    '''
    ``sum_(N>=1) (q^(2k) z)^N m_(k,N)`` for Stieltjes-Wigert and
    ``sum_(N>=1) z^N m_(2k,N)`` for the other ensembles, through ``z^(order-1)``.

    For the symmetric ensembles ``k`` indexes the even moment ``2k``.
    '''
    coeffs = [weight.one() * 0]
    for n in range(1, order):
        if weight.name == weights.STIELTJES_WIGERT:
            value = weight.q ** (2 * k * n) * density_moment_oracle(weight, k, n, route)
        elif weight.name in (weights.DISCRETE_Q_HERMITE, weights.GAUSSIAN):
            value = density_moment_oracle(weight, 2 * k, n, route)
        else:
            value = density_moment_oracle(weight, k, n, route)
        coeffs.append(value)
    logger.debug('direct series for %s k = %d through z^%d', weight.name, k, order - 1)
    return FormalSeries(coeffs, order)


def sw_product_series(k, order, s=S):
    '''
    ``q^(-(k^2-2k)/2) z/(1-z) (q^(k+1) z; q)_(k-1) / (q z; q)_k``.
    '''
    if k < 1:
        raise ConfigError('Generating function requires k >= 1, got {0}'.format(k))
    q = s * s
    numer = _pochhammer_series(q ** (k + 1), q, k - 1, order)
    denom = _pochhammer_series(q, q, k, order) * _linear(1, -1, order)
    return (numer / denom).shift(1) * s ** (-(k * k - 2 * k))


def sw_partial_fraction_coefficient(k, index, s=S):
    '''
    ``b_s = (-1)^s q^(-k^2/2 + k) q^(s(s+1)/2) (q;q)_(2k-s-1) / ((q;q)_s (q;q)_(k-s)^2)``.
    '''
    q = s * s
    sign = -1 if index % 2 else 1
    return (sign * s ** (-(k * k) + 2 * k + index * (index + 1))
            * qpochhammer(q, 2 * k - index - 1, q)
            / (qpochhammer(q, index, q) * qpochhammer(q, k - index, q) ** 2))


def dqh_product_series(k, order, q=Q):
    '''
    ``z (1 + z)/(1 - z) ((q z)^2; q^2)_(k-1) / (q z; q)_(2k) (q; q^2)_k``.
    '''
    if k < 1:
        raise ConfigError('Generating function requires k >= 1, got {0}'.format(k))
    squares = FormalSeries.one(order)
    for j in range(k - 1):
        squares = squares * FormalSeries([1, 0, -(q ** (2 + 2 * j))], order)
    denom = _pochhammer_series(q, q, 2 * k, order) * _linear(1, -1, order)
    product = squares * _linear(1, 1, order) / denom
    return product.shift(1) * qpochhammer(q, k, q * q)


def gaussian_product_series(k, order):
    '''
    ``(2k-1)!! z (1+z)^k / (1-z)^(k+2)``, the discrete q-Hermite product at
    ``q = 1``; normalised for the weight ``exp(-x^2/2)``.
    '''
    numer = FormalSeries.one(order)
    for _ in range(k):
        numer = numer * _linear(1, 1, order)
    denom = FormalSeries.one(order)
    for _ in range(k + 2):
        denom = denom * _linear(1, -1, order)
    return (numer / denom).shift(1) * Fraction(double_factorial(2 * k - 1))


def product_series(weight, k, order):
    '''
    The closed product form for ``weight``.
    '''
    if weight.name == weights.STIELTJES_WIGERT:
        return sw_product_series(k, order)
    if weight.name == weights.DISCRETE_Q_HERMITE:
        return dqh_product_series(k, order)
    if weight.name == weights.GAUSSIAN:
        return gaussian_product_series(k, order)
    raise ConfigError('No generating function product form for {0}'.format(weight.name))


def generating_function(weight, k, n_max, route='schur_sum'):
    '''
    The direct series from oracle moments and the product form, both through
    ``z^n_max``.

    :returns: Tuple ``(direct, product)`` of :class:`FormalSeries`.
    '''
    if n_max < 1:
        raise ConfigError('Generating function needs N_max >= 1, got {0}'.format(n_max))
    order = n_max + 1
    return direct_series(weight, k, order, route), product_series(weight, k, order)
