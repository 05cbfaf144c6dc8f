'''
Expansions of scaled density moments as finite sums of powers ``q^(pN)``:
exact extraction from moment values by a Vandermonde solve, and the
coefficients as printed in closed form.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from qmoments.ensembles import weights
from qmoments.ensembles.density import density_moment_closed, density_moment_oracle
from qmoments.ensembles.genfunc import sw_partial_fraction_coefficient
from qmoments.exact_algebra import solve, Q, S
from qmoments.q_special import qpochhammer
from qmoments.util import ConfigError, ExpansionError


logger = logging.getLogger(__name__)

SOURCES = ('closed_form', 'oracle')


def vandermonde_extract(values, q, count, start=1):
    '''
    Solves ``sum_(p<count) c_p q^(p N) = values[N - start]`` for
    ``N = start .. start + count - 1``.

    :param values: Sequence of at least ``count`` exact values.
    :param q: The exact base.
    :returns: List ``[c_0, ..., c_(count-1)]``.
    '''
    matrix = []
    for n in range(start, start + count):
        node = q ** n
        row = []
        power = q ** 0
        for _ in range(count):
            row.append(power)
            power = power * node
        matrix.append(row)
    return solve(matrix, list(values[:count]))


def expansion_value(coefficients, q, n):
    '''
    ``sum_p c_p q^(p n)``.
    '''
    total = 0
    for index, value in enumerate(coefficients):
        total = total + value * q ** (index * n)
    return total


def _moment(weight, k, n, source):
    if source == 'closed_form':
        return density_moment_closed(weight, k, n)
    if source == 'oracle':
        return density_moment_oracle(weight, k, n)
    raise ConfigError('Unknown moment source \'{0}\''.format(source))


def _extract(values, q, count, check):
    '''
    Extracts ``count`` coefficients from the first values and confirms the
    remaining ``check`` values.
    '''
    coefficients = vandermonde_extract(values, q, count)
    for offset in range(check):
        n = count + 1 + offset
        if expansion_value(coefficients, q, n) != values[count + offset]:
            raise ExpansionError('Expansion with {0} terms fails at N = {1}'.format(count, n))
    return coefficients


def sw_expansion_coefficients(k, source='closed_form', check=1):
    '''
    ``beta_s`` with ``q^(2Nk) m_(k,N) = sum_(s<=k) beta_s q^(sN)`` for the
    Stieltjes-Wigert ensemble.

    :raises ExpansionError: if the extra ``check`` values are not reproduced.
    '''
    weight = weights.stieltjes_wigert()
    q = weight.q
    values = [q ** (2 * n * k) * _moment(weight, k, n, source)
              for n in range(1, k + 2 + check)]
    coefficients = _extract(values, q, k + 1, check)
    logger.debug('SW expansion coefficients for k = %d extracted', k)
    return coefficients


def dqh_expansion_coefficients(k, source='closed_form', check=1):
    '''
    ``c_p`` with ``q^k m_(2k,N) = sum_(p<=2k) c_p q^(pN)`` for the discrete
    q-Hermite ensemble.
    '''
    weight = weights.discrete_q_hermite()
    q = weight.q
    values = [q ** k * _moment(weight, 2 * k, n, source)
              for n in range(1, 2 * k + 2 + check)]
    coefficients = _extract(values, q, 2 * k + 1, check)
    logger.debug('d-qH expansion coefficients for k = %d extracted', k)
    return coefficients


def sw_printed_coefficients(k, s=S):
    '''
    The printed ``b_s`` for ``s = 0..k``.
    '''
    return [sw_partial_fraction_coefficient(k, index, s) for index in range(k + 1)]


def sw_coefficient_convention_factor(k, index, s=S):
    '''
    ``q^(k/2 - s)``; the extracted ``beta_s`` equal this factor times the
    printed ``b_s``.
    '''
    return s ** (k - 2 * index)


def dqh_printed_coefficient(k, p, q=Q):
    '''
    ``c_p`` as printed in closed form (``0 <= p <= 2k``).
    '''
    if p == 0:
        return 2 * q ** k / (1 - q ** (2 * k))
    if p == 1:
        if k > 1:
            return q * 0
        return -(1 + q) / (1 - q)
    if p < k:
        return q * 0
    sign = -1 if (k + p - 1) % 2 else 1
    ratio = (1 + q ** p) / (1 - q ** p)
    exponent = p * (p + 1) // 2 - 2 * p * k + k * (k - 1)
    return (sign * ratio * q ** exponent * qpochhammer(q * q, p - 1, q * q) * qpochhammer(q, k, q * q)
            / (qpochhammer(q * q, p - k, q * q) * qpochhammer(q, p - 1, q) * qpochhammer(q, 2 * k - p, q)))


def dqh_printed_coefficients(k, q=Q):
    return [dqh_printed_coefficient(k, p, q) for p in range(2 * k + 1)]


def is_antisymmetric(value):
    '''
    ``value(1/q) == -value(q)``.
    '''
    return value.subs_inverse() == -value


def antisymmetry_failures(coefficients):
    '''
    Indices whose coefficient is not odd under ``q -> 1/q``.
    '''
    return [index for index, value in enumerate(coefficients) if not is_antisymmetric(value)]


def lql_expansion_coefficients(k, check=True):
    '''
    ``c[s1][s2]`` with ``m_(k,N) = sum c[s1][s2] q^(s1 alpha + s2 N)`` over
    ``s1 <= k``, ``s2 <= 2k`` for the little q-Laguerre ensemble, solved on
    the grid ``alpha = 0..k``, ``N = 1..2k+1``.

    :raises ExpansionError: if ``check`` is set and the expansion misses the
                            moments at ``alpha = k + 1`` or ``N = 2k + 2``.
    '''
    q = Q
    by_alpha = []
    for alpha in range(k + 1):
        values = [density_moment_closed(weights.little_q_laguerre(alpha), k, n)
                  for n in range(1, 2 * k + 2)]
        by_alpha.append(vandermonde_extract(values, q, 2 * k + 1))
    grid = [[None] * (2 * k + 1) for _ in range(k + 1)]
    for s2 in range(2 * k + 1):
        column = vandermonde_extract([row[s2] for row in by_alpha], q, k + 1, start=0)
        for s1, value in enumerate(column):
            grid[s1][s2] = value
    if check:
        for alpha, n in ((k + 1, 1), (0, 2 * k + 2), (k + 1, 2 * k + 2)):
            expected = density_moment_closed(weights.little_q_laguerre(alpha), k, n)
            if lql_expansion_value(grid, alpha, n, q) != expected:
                raise ExpansionError('Expansion of m({0}, N) misses alpha = {1}, N = {2}'.format(
                    k, alpha, n))
    return grid


def lql_expansion_value(grid, alpha, n, q=Q):
    '''
    ``sum c[s1][s2] q^(s1 alpha + s2 N)``.
    '''
    total = 0
    for s1, row in enumerate(grid):
        for s2, value in enumerate(row):
            total = total + value * q ** (s1 * alpha + s2 * n)
    return total


def coefficient_expansion(weight, k, source='oracle'):
    '''
    The extracted expansion coefficients of a weight together with the
    printed ones.

    :returns: Tuple ``(extracted, printed)``.
    '''
    if k < 1:
        raise ConfigError('Coefficient expansion needs k >= 1, got {0}'.format(k))
    if weight.name == weights.STIELTJES_WIGERT:
        return sw_expansion_coefficients(k, source), sw_printed_coefficients(k)
    if weight.name == weights.DISCRETE_Q_HERMITE:
        return dqh_expansion_coefficients(k, source), dqh_printed_coefficients(k)
    raise ConfigError('No coefficient expansion for {0}'.format(weight.name))
