'''
Linear recurrences in ``k`` for the density moments: the known three term
recurrences of the classical ensembles and a search for recurrences with
coefficients from a finite ansatz.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from sympy import Integer, Rational, Symbol
from qmoments.ensembles import weights
from qmoments.ensembles.density import (density_moment_closed, gaussian_moment_2f1,
                                        laguerre_moment_3f2)
from qmoments.exact_algebra import Q
from qmoments.exact_algebra.linalg import nullspace
from qmoments.util import ConfigError


logger = logging.getLogger(__name__)

K_SYMBOL = Symbol('k')
N_SYMBOL = Symbol('N')
Q_SYMBOL = Symbol('q')


def gaussian_recurrence_residual(k, n):
    '''
    ``(k+1) m_2k - (2k-1) N m_(2k-2) - (k-1/2)(k-1)(k-3/2) m_(2k-4)`` for the
    weight ``exp(-x^2)``; zero for ``k >= 2``.
    '''
    half = Fraction(1, 2)
    return ((k + 1) * gaussian_moment_2f1(k, n)
            - (2 * k - 1) * n * gaussian_moment_2f1(k - 1, n)
            - (k - half) * (k - 1) * (k - 3 * half) * gaussian_moment_2f1(k - 2, n))


def gaussian_recurrence_printed_residual(k, n):
    '''
    The same recurrence as printed, without the factor ``N`` on the middle
    term; vanishes only at ``N = 1``.
    '''
    half = Fraction(1, 2)
    return ((k + 1) * gaussian_moment_2f1(k, n)
            - (2 * k - 1) * gaussian_moment_2f1(k - 1, n)
            - (k - half) * (k - 1) * (k - 3 * half) * gaussian_moment_2f1(k - 2, n))


def laguerre_recurrence_residual(k, n, alpha):
    '''
    ``(k+2) m_(k+1) - (2k+1)(2N+alpha) m_k - (k-1)(k^2-alpha^2) m_(k-1)``;
    zero for ``k >= 1``.
    '''
    return ((k + 2) * _laguerre_moment(k + 1, n, alpha)
            - (2 * k + 1) * (2 * n + alpha) * _laguerre_moment(k, n, alpha)
            - (k - 1) * (k * k - alpha * alpha) * _laguerre_moment(k - 1, n, alpha))


def _laguerre_moment(k, n, alpha):
    if k == 0:
        return Fraction(n)
    return laguerre_moment_3f2(k, n, alpha)


class Ansatz(object):

    '''
    Recurrence ``sum_(i<=order) P_i(k, N) m(k - i, N) = 0`` with each ``P_i``
    a combination of ``k_basis[a](k) * n_basis[b](N)``.

    :param order: Number of backward steps.
    :param k_basis: Callables of ``k``.
    :param n_basis: Callables of ``N``.
    :param k_labels: sympy expressions naming the ``k`` basis.
    :param n_labels: sympy expressions naming the ``N`` basis.
    '''

    def __init__(self, order, k_basis, n_basis, k_labels, n_labels):
        self.order = order
        self.k_basis = list(k_basis)
        self.n_basis = list(n_basis)
        self.k_labels = list(k_labels)
        self.n_labels = list(n_labels)

    @property
    def width(self):
        return (self.order + 1) * len(self.k_basis) * len(self.n_basis)

    def index(self, step, a, b):
        return (step * len(self.k_basis) + a) * len(self.n_basis) + b

    @classmethod
    def polynomial(cls, order=2, k_degree=3, n_degree=1):
        '''
        Coefficients polynomial in ``k`` and ``N``.
        '''
        return cls(order,
                   [(lambda k, a=a: k ** a) for a in range(k_degree + 1)],
                   [(lambda n, b=b: n ** b) for b in range(n_degree + 1)],
                   [K_SYMBOL ** a for a in range(k_degree + 1)],
                   [N_SYMBOL ** b for b in range(n_degree + 1)])

    @classmethod
    def q_exponential(cls, q=Q, order=2, k_degree=1, n_degree=1):
        '''
        Coefficients combinations of ``q^(ak) q^(bN)``.
        '''
        return cls(order,
                   [(lambda k, a=a: q ** (a * k)) for a in range(k_degree + 1)],
                   [(lambda n, b=b: q ** (b * n)) for b in range(n_degree + 1)],
                   [Q_SYMBOL ** (a * K_SYMBOL) for a in range(k_degree + 1)],
                   [Q_SYMBOL ** (b * N_SYMBOL) for b in range(n_degree + 1)])


class Recurrence(object):

    '''
    One recurrence found by :func:`search_recurrence`: ``coeffs[i][a][b]``.
    '''

    def __init__(self, ansatz, vector):
        self.ansatz = ansatz
        self.coeffs = [[[vector[ansatz.index(step, a, b)] for b in range(len(ansatz.n_basis))]
                        for a in range(len(ansatz.k_basis))]
                       for step in range(ansatz.order + 1)]

    def coefficient(self, step, k, n):
        '''
        ``P_step(k, N)``.
        '''
        total = 0
        for a, row in enumerate(self.coeffs[step]):
            for b, value in enumerate(row):
                if value != 0:
                    total = total + value * self.ansatz.k_basis[a](k) * self.ansatz.n_basis[b](n)
        return total

    def residual(self, moment, k, n):
        total = 0
        for step in range(self.ansatz.order + 1):
            total = total + self.coefficient(step, k, n) * moment(k - step, n)
        return total

    def normalised(self, step=0, a=1, b=0):
        '''
        Scales so that ``coeffs[step][a][b] == 1`` (unchanged if that entry is
        zero).
        '''
        pivot = self.coeffs[step][a][b]
        if pivot == 0:
            return self
        scaled = Recurrence.__new__(Recurrence)
        scaled.ansatz = self.ansatz
        scaled.coeffs = [[[value / pivot for value in row] for row in block] for block in self.coeffs]
        return scaled

    def expressions(self):
        '''
        The coefficients ``P_i`` as sympy expressions.
        '''
        result = []
        for block in self.coeffs:
            total = Integer(0)
            for a, row in enumerate(block):
                for b, value in enumerate(row):
                    if value != 0:
                        total += _to_sympy(value) * self.ansatz.k_labels[a] * self.ansatz.n_labels[b]
            result.append(total.expand())
        return result

    def __str__(self):
        return ' + '.join('({0}) m(k-{1}, N)'.format(expr, step)
                          for step, expr in enumerate(self.expressions()))


def _to_sympy(value):
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, int):
        return Integer(value)
    return value.to_sympy()


def search_recurrence(moment, ansatz, k_values, n_values):
    '''
    Every recurrence of the ansatz that the moments satisfy on the grid.

    :param moment: Callable ``(k, N) -> exact value``.
    :returns: List of :class:`Recurrence` (a basis of the solution space).
    '''
    k_values, n_values = list(k_values), list(n_values)
    if not k_values or not n_values:
        raise ConfigError('Recurrence search needs a non-empty grid')
    if min(k_values) < ansatz.order:
        raise ConfigError('Grid must start at k >= {0}'.format(ansatz.order))
    rows = []
    for n in n_values:
        moments = dict((k, moment(k, n)) for k in range(min(k_values) - ansatz.order, max(k_values) + 1))
        n_values_at = [basis(n) for basis in ansatz.n_basis]
        for k in k_values:
            row = [0] * ansatz.width
            for step in range(ansatz.order + 1):
                value = moments[k - step]
                for a, k_basis in enumerate(ansatz.k_basis):
                    k_value = k_basis(k)
                    for b, n_value in enumerate(n_values_at):
                        row[ansatz.index(step, a, b)] = value * k_value * n_value
            rows.append(row)
    basis = nullspace(rows, ansatz.width)
    logger.info('recurrence search: %d equations, %d unknowns, %d solutions',
                len(rows), ansatz.width, len(basis))
    return [Recurrence(ansatz, vector) for vector in basis]


def q_recurrence_search(weight, order=2, k_degree=1, n_degree=1, k_values=range(2, 8),
                        n_values=range(1, 5)):
    '''
    Exploratory search for a recurrence of a q-ensemble's moments with
    coefficients in ``q^(ak) q^(bN)``; an empty result means none exists in
    the ansatz on that grid.
    '''
    if not weight.is_q:
        raise ConfigError('q recurrence search needs a q-weight, got {0}'.format(weight.name))
    step = 2 if weight.name == weights.DISCRETE_Q_HERMITE else 1

    def moment(k, n):
        return density_moment_closed(weight, step * k, n)
    ansatz = Ansatz.q_exponential(weight.q, order, k_degree, n_degree)
    return search_recurrence(moment, ansatz, k_values, n_values)


def recurrence_search(weight, order=2, max_poly_degree=None, k_range=range(2, 10),
                      n_range=range(1, 7)):
    '''
    The first recurrence of the weight's moments in the ansatz, or ``None``.

    Classical weights use coefficients polynomial in ``k`` (degree
    ``max_poly_degree``, default 3) and linear in ``N``; q-weights use
    combinations of ``q^(ak) q^(bN)`` with ``a, b <= max_poly_degree``
    (default 1).
    '''
    if weight.is_q:
        degree = 1 if max_poly_degree is None else max_poly_degree
        found = q_recurrence_search(weight, order, degree, degree, k_range, n_range)
        return found[0] if found else None
    degree = 3 if max_poly_degree is None else max_poly_degree
    if weight.name == weights.GAUSSIAN:
        def moment(k, n):
            return gaussian_moment_2f1(k, n)
    else:
        def moment(k, n):
            return _laguerre_moment(k, n, weight.alpha)
    found = search_recurrence(moment, Ansatz.polynomial(order, degree, 1), k_range, n_range)
    return found[0].normalised() if found else None
