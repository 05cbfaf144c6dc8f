'''
Classical limits ``q -> 1`` of the q-ensembles and the genus expansion of
the Gaussian moments.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from sympy import Poly, Rational, Symbol, interpolate
from qmoments.ensembles import as_partition
from qmoments.ensembles.density import dqh_moment_sum, lql_moment_3phi2, gaussian_moment_2f1
from qmoments.ensembles.schur import dqh_schur_parity_product, lql_schur_product
from qmoments.exact_algebra import Q
from qmoments.util import ConfigError


N_SYMBOL = Symbol('N')


def _as_fraction(value):
    return Fraction(int(value.p), int(value.q))


def _at_one(value):
    if isinstance(value, int):
        return Fraction(value)
    return value.eval_at_one()


def dqh_moment_limit(k, n):
    '''
    ``lim (1 - q^2)^(-k) m_(2k,N)`` of the discrete q-Hermite ensemble, which
    is the Gaussian moment ``m_(2k,N)`` for the weight ``exp(-x^2)``.
    '''
    return _at_one(dqh_moment_sum(k, n) / (1 - Q * Q) ** k)


def lql_moment_limit(k, n, alpha):
    '''
    ``lim (1 - q)^(-k) m_(k,N)`` of the little q-Laguerre ensemble.
    '''
    return _at_one(lql_moment_3phi2(k, n, alpha) / (1 - Q) ** k)


def dqh_schur_limit(kappa, n):
    '''
    ``lim (1 - q^2)^(-|kappa|/2) <s_kappa>`` of the discrete q-Hermite
    ensemble.
    '''
    kappa = as_partition(kappa)
    value = dqh_schur_parity_product(kappa, n)
    if value == 0:
        return Fraction(0)
    return _at_one(value / (1 - Q * Q) ** (kappa.size // 2))


def lql_schur_limit(kappa, n, alpha):
    '''
    ``lim (1 - q)^(-|kappa|) <s_kappa>`` of the little q-Laguerre ensemble.
    '''
    kappa = as_partition(kappa)
    return _at_one(lql_schur_product(kappa, n, alpha) / (1 - Q) ** kappa.size)


def gaussian_moment_polynomial(k):
    '''
    ``2^k m_(2k,N)`` as an exact polynomial in ``N`` of degree ``k + 1``,
    interpolated through ``N = 1 .. k + 2``.

    :rtype: :class:`sympy.Poly`
    '''
    points = []
    for n in range(1, k + 3):
        value = 2 ** k * gaussian_moment_2f1(k, n)
        points.append((n, Rational(value.numerator, value.denominator)))
    return Poly(interpolate(points, N_SYMBOL), N_SYMBOL)


def genus_coefficients(k):
    '''
    ``c(g; k)`` in ``2^k m_(2k,N) = sum_g c(g; k) N^(k + 1 - 2g)``.

    :returns: Tuple ``(coefficients, residual)``; ``residual`` lists the
              powers of ``N`` of the wrong parity with non-zero coefficient.
    '''
    poly = gaussian_moment_polynomial(k)
    top = k + 1
    coefficients = []
    residual = []
    for power in range(top, -1, -1):
        coeff = _as_fraction(poly.coeff_monomial(N_SYMBOL ** power))
        if (top - power) % 2 == 0:
            coefficients.append(coeff)
        elif coeff != 0:
            residual.append(power)
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients, residual


def leading_coefficient(k):
    '''
    The coefficient of ``N^(k+1)`` in ``2^k m_(2k,N)``.
    '''
    return _as_fraction(gaussian_moment_polynomial(k).coeff_monomial(N_SYMBOL ** (k + 1)))


LIMIT_KINDS = ('gaussian_from_dqh', 'laguerre_from_lql')


def q_to_one_limits(kind, k, n, alpha=0):
    '''
    The classical moment reached from a q-ensemble; ``k`` indexes ``m_2k``
    for ``gaussian_from_dqh``.

    :raises PoleError: if the scaled moment is singular at ``q = 1``.
    '''
    if kind == 'gaussian_from_dqh':
        return dqh_moment_limit(k, n)
    if kind == 'laguerre_from_lql':
        return lql_moment_limit(k, n, alpha)
    raise ConfigError('Unknown limit kind \'{0}\''.format(kind))
