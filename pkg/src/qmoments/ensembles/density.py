'''
Moments ``m_(k,N)`` of the spectral density: two independent oracles and
the closed forms of each ensemble.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from qmoments.ensembles import Partition
from qmoments.ensembles import weights
from qmoments.ensembles.schur import schur_average_oracle
from qmoments.exact_algebra import XPoly, Q, S
from qmoments.exact_algebra.xpoly import stieltjes_polynomials
from qmoments.q_special import (qpochhammer, qbinomial, little_q_jacobi,
                                basic_hypergeometric, HypergeometricSpec,
                                classical_hypergeometric_terminating)
from qmoments.util import ConfigError, DegenerateGramError, OracleDisagreementError
from qmoments.util.math import binomial, double_factorial, factorial


logger = logging.getLogger(__name__)

ROUTES = ('schur_sum', 'cd_sum')


def density_moment_oracle(weight, k, n, route='schur_sum'):
    '''
    ``m_(k,N)`` by brute force.

    ``schur_sum`` sums alternating hook averages
    ``sum_r (-1)^r <s_(k-r, 1^r)>``; ``cd_sum`` builds monic orthogonal
    polynomials ``p_j`` and norms ``h_j`` from the moments and sums
    ``L[x^k p_j^2] / h_j`` over ``j < N``.
    '''
    if route == 'schur_sum':
        if k == 0:
            return weight.one() * n
        total = weight.one() * 0
        for r in range(min(k, n)):
            term = schur_average_oracle(weight, Partition.hook(k - r, r), n)
            total = total + (-term if r % 2 else term)
        return total
    if route == 'cd_sum':
        key = ('stieltjes', n)
        if key not in weight.cache:
            try:
                weight.cache[key] = stieltjes_polynomials(weight.moment, n)
            except ZeroDivisionError:
                raise DegenerateGramError('Vanishing norm for {0!r} below N = {1}'.format(weight, n))
        polys, norms = weight.cache[key]
        power = XPoly([0] * k + [1])
        total = weight.one() * 0
        for poly, norm in zip(polys, norms):
            total = total + (power * poly * poly).integrate(weight.moment) / norm
        return total
    raise ConfigError('Unknown oracle route \'{0}\''.format(route))


def density_moment_oracles(weight, k, n):
    '''
    Both oracle routes, required to agree.

    :raises OracleDisagreementError: if they differ.
    '''
    first = density_moment_oracle(weight, k, n, 'schur_sum')
    second = density_moment_oracle(weight, k, n, 'cd_sum')
    if first != second:
        raise OracleDisagreementError('Oracle routes disagree for {0!r} at k = {1}, N = {2}: {3} != {4}'.format(
            weight, k, n, first, second))
    return first


def sw_moment_little_q_jacobi(k, n, s=S):
    '''
    Stieltjes-Wigert moment from the little q-Jacobi form:
    ``q^((N-1/2)k) m = -((-q^(-1/2))^k / (1 - q^-k)) p_k(q^-N; 1, q | q^-1)``.
    '''
    q = s * s
    inverse = 1 / q
    jacobi = little_q_jacobi(k, q ** (-n), q ** 0, q, inverse)
    scaled = -((-1) ** k) * s ** (-k) / (1 - q ** (-k)) * jacobi
    return scaled * s ** (-(2 * n - 1) * k)


def sw_moment_binomial_inverse(k, n, s=S):
    '''
    ``q^((N-1/2)k) m`` as the alternating sum of q^-1 binomials (first form).
    '''
    q = s * s
    inverse = 1 / q
    total = 0
    for r in range(k):
        sign = -1 if r % 2 else 1
        total = total + (sign * s ** (-((k - r) ** 2 + r)) * qbinomial(n + k - r - 1, k, inverse)
                         * qbinomial(k - 1, r, inverse))
    return total


def sw_moment_binomial(k, n, s=S):
    '''
    ``q^((N-1/2)k) m`` as the alternating sum of q binomials (second form).
    '''
    q = s * s
    total = 0
    for r in range(k):
        sign = -1 if r % 2 else 1
        total = total + (sign * q ** ((r * r + r) // 2 + k * r) * qbinomial(n + k - r - 1, k, q)
                         * qbinomial(k - 1, r, q))
    return total * q ** (-k * n) * s ** (-(k * k - 2 * k))


def sw_unscale(scaled, k, n, s=S):
    '''
    Recovers ``m_(k,N)`` from ``q^((N-1/2)k) m_(k,N)``.
    '''
    return scaled * s ** (-(2 * n - 1) * k)


def dqh_moment_sum(k, n, q=Q):
    '''
    ``m_(2k,N)`` for the discrete q-Hermite ensemble as the signed sum over
    ``r < 2k`` of q-binomials.
    '''
    total = 0
    for r in range(2 * k):
        half = r // 2
        sign = -1 if (r + (r + 1) // 2) % 2 else 1
        total = total + (sign * q ** (half * (half + 1)) * qbinomial(n + 2 * k - r - 1, 2 * k, q)
                         * qbinomial(k - 1, half, q * q))
    return total * qpochhammer(q, k, q * q)


def dqh_second_moment(n, q=Q):
    '''
    ``m_(2,N) = (q^(2N)(q + 1/q) - q^N(q + 2 + 1/q) + 2) / (1 - q^2)``.
    '''
    return ((q ** (2 * n) * (q + 1 / q) - q ** n * (q + 2 + 1 / q) + 2)
            / (1 - q * q))


def lql_amplitude(k, n, alpha, q=Q):
    '''
    ``A_(k,N) = (q;q)_(N+k-1+alpha) (q;q)_(N+k-1) / ((q;q)_(N-1) (q;q)_k (q;q)_(N+alpha-1))``.
    '''
    return (qpochhammer(q, n + k - 1 + alpha, q) * qpochhammer(q, n + k - 1, q)
            / (qpochhammer(q, n - 1, q) * qpochhammer(q, k, q) * qpochhammer(q, n + alpha - 1, q)))


def lql_moment_3phi2(k, n, alpha, q=Q):
    '''
    Little q-Laguerre moment ``A_(k,N) 3phi2(q^-(k-1), q^-(N-1), q^-(alpha+N-1);
    q^-(N+k-1), q^-(N+k+alpha-1) | q; q^-k)``.
    '''
    spec = HypergeometricSpec([q ** (-(k - 1)), q ** (-(n - 1)), q ** (-(alpha + n - 1))],
                              [q ** (-(n + k - 1)), q ** (-(n + k + alpha - 1))],
                              q ** (-k), base=q, term_count=min(k, n))
    return lql_amplitude(k, n, alpha, q) * basic_hypergeometric(spec)


def gaussian_moment_2f1(k, n):
    '''
    ``m_(2k,N) = 2^-k (2k-1)!! N 2F1(-k, 1-N; 2; 2)`` for the weight ``exp(-x^2)``.
    '''
    return (Fraction(double_factorial(2 * k - 1), 2 ** k) * n
            * classical_hypergeometric_terminating([-k, 1 - n], [2], Fraction(2)))


def gaussian_moment_gamma(k, n):
    '''
    ``m_(2k,N)`` from ``2^(2k)/N int |x|^(2k) rho = Gamma(2k+1)/Gamma(k+1) 2F1(-k, 1-N; 2; 2)``.
    '''
    return (Fraction(factorial(2 * k), factorial(k)) * n / Fraction(4) ** k
            * classical_hypergeometric_terminating([-k, 1 - n], [2], Fraction(2)))


def gaussian_moment_rsum_printed(k, n):
    '''
    ``(2k-1)!! sum_r (-1)^r (binom(N+2k-2r-1, 2k) + binom(N+2k-2r-2, 2k)) binom(k-1, r)``
    (normalised for ``exp(-x^2/2)``).
    '''
    total = 0
    for r in range(k):
        total += (-1) ** r * (binomial(n + 2 * k - 2 * r - 1, 2 * k)
                              + binomial(n + 2 * k - 2 * r - 2, 2 * k)) * binomial(k - 1, r)
    return Fraction(double_factorial(2 * k - 1) * total)


def gaussian_moment_lsum_printed(k, n):
    '''
    ``(2k-1)!! sum_(l<N) (k+2)_l / l! binom(k, N-1-l)`` (normalised for
    ``exp(-x^2/2)``).
    '''
    total = Fraction(0)
    for l in range(n):
        rising = 1
        for i in range(l):
            rising *= k + 2 + i
        total += Fraction(rising, factorial(l)) * binomial(k, n - 1 - l)
    return double_factorial(2 * k - 1) * total


def laguerre_moment_3f2(k, n, alpha):
    '''
    ``m_(k,N) = N (N+a) (k+a)!/(1+a)! 3F2(1-k, 2+k, 1-N; 2, 2+a | 1)``.
    '''
    return (Fraction(n * (n + alpha) * factorial(k + alpha), factorial(1 + alpha))
            * classical_hypergeometric_terminating([1 - k, 2 + k, 1 - n], [2, 2 + alpha], Fraction(1)))


def laguerre_moment_limit(k, n, alpha):
    '''
    ``m_(k,N) = (N+k-1+a)! (N+k-1)! / ((N-1)! k! (N+a-1)!)
    3F2(-(k-1), -(N-1), -(a+N-1); -(N+k-1), -(N+k+a-1) | 1)``.
    '''
    amplitude = Fraction(factorial(n + k - 1 + alpha) * factorial(n + k - 1),
                         factorial(n - 1) * factorial(k) * factorial(n + alpha - 1))
    return amplitude * classical_hypergeometric_terminating(
        [-(k - 1), -(n - 1), -(alpha + n - 1)], [-(n + k - 1), -(n + k + alpha - 1)], Fraction(1))


def density_moment_closed(weight, k, n):
    '''
    ``m_(k,N)`` from the closed form of the weight's ensemble.
    '''
    name = weight.name
    if k == 0:
        return weight.one() * n
    if name == weights.STIELTJES_WIGERT:
        value = sw_moment_little_q_jacobi(k, n)
    elif name in (weights.DISCRETE_Q_HERMITE, weights.GAUSSIAN):
        if k % 2:
            return weight.one() * 0
        if name == weights.GAUSSIAN:
            value = gaussian_moment_2f1(k // 2, n)
        else:
            value = dqh_moment_sum(k // 2, n)
    elif name == weights.LITTLE_Q_LAGUERRE:
        value = lql_moment_3phi2(k, n, weight.alpha)
    elif name == weights.LAGUERRE:
        value = laguerre_moment_3f2(k, n, weight.alpha)
    else:
        raise ConfigError('No closed moment form for {0}'.format(name))
    return weight.one() * value


class MomentTable(object):

    '''
    Moments ``m_(k,N)`` of one ensemble keyed by ``(k, N)`` with the route
    that produced each value.
    '''

    def __init__(self, weight):
        self.weight = weight
        self.entries = {}
        self.provenance = {}

    @property
    def ensemble(self):
        return self.weight.name

    def add(self, k, n, value, provenance):
        self.entries[(k, n)] = value
        self.provenance[(k, n)] = provenance

    def __getitem__(self, key):
        return self.entries[key]

    def __contains__(self, key):
        return key in self.entries

    def rows(self):
        '''
        Yields ``(k, N, value)`` sorted by ``(k, N)``.
        '''
        for key in sorted(self.entries):
            yield key[0], key[1], self.entries[key]


def _cell_value(weight, k, n, route):
    if route == 'closed_form':
        return density_moment_closed(weight, k, n), 'closed_form'
    if route == 'oracle':
        return density_moment_oracles(weight, k, n), 'oracle_schur'
    if route in ROUTES:
        return (density_moment_oracle(weight, k, n, route),
                'oracle_schur' if route == 'schur_sum' else 'oracle_cd')
    raise ConfigError('Unknown moment route \'{0}\''.format(route))


def _remote_cell(name, alpha, k, n, route):
    value, provenance = _cell_value(weights.weight_by_name(name, alpha or 0), k, n, route)
    return k, n, value, provenance


def moment_table(weight, k_values, n_values, route='closed_form', workers=None):
    '''
    Builds a :class:`MomentTable`; with ``route='oracle'`` both oracle routes
    are computed and must agree.

    :param workers: Number of worker processes; cells are independent and are
                    merged in ``(k, N)`` order.  ``None`` computes in process.
    '''
    if route not in ROUTES + ('closed_form', 'oracle'):
        raise ConfigError('Unknown moment route \'{0}\''.format(route))
    table = MomentTable(weight)
    cells = [(k, n) for k in k_values for n in n_values]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_remote_cell, weight.name, weight.alpha, k, n, route)
                       for k, n in cells]
            results = [future.result() for future in futures]
    else:
        results = [(k, n) + _cell_value(weight, k, n, route) for k, n in cells]
    for k, n, value, provenance in sorted(results, key=lambda item: (item[0], item[1])):
        table.add(k, n, value, provenance)
        logger.debug('%s m(%d, %d) = %s', weight.name, k, n, value)
    return table
