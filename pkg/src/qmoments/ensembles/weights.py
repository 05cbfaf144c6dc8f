'''
Weight specifications of the q-classical ensembles (Stieltjes-Wigert,
discrete q-Hermite, little q-Laguerre) and of their classical limits
(Gaussian, Laguerre).

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.exact_algebra import XPoly, Q, S
from qmoments.q_special import qpochhammer
from qmoments.q_operators.pearson import derive_pearson_pair
from qmoments.util import ConfigError
from qmoments.util.math import double_factorial, rising_factorial


STIELTJES_WIGERT = 'stieltjes_wigert'
DISCRETE_Q_HERMITE = 'discrete_q_hermite'
LITTLE_Q_LAGUERRE = 'little_q_laguerre'
GAUSSIAN = 'gaussian'
LAGUERRE = 'laguerre'
JACOBI = 'jacobi'

SHORT_NAMES = {
    'sw': STIELTJES_WIGERT,
    'dqh': DISCRETE_Q_HERMITE,
    'lql': LITTLE_Q_LAGUERRE,
    'gaussian': GAUSSIAN,
    'laguerre': LAGUERRE,
    'jacobi': JACOBI,
}


class WeightSpec(object):

    '''
    A weight given by its moment sequence, its Pearson pair and its lattice.

    :param name: One of the ensemble names above.
    :param moment: Callable ``n -> moment`` (exact).
    :param q: The exact value of ``q`` (``s^2`` for Stieltjes-Wigert) or
              ``None`` for classical weights.
    :param base: ``'s'`` or ``'q'`` (``None`` for classical weights).
    :param lattice: Description of the Jackson integral terminals.
    :param sigma: Pearson ``sigma`` as an :class:`XPoly`.
    :param tau: Pearson ``tau`` as an :class:`XPoly`.
    :param ratio: ``(num, den)`` with ``w(qx)/w(x) = num/den``, if known.
    :param alpha: Laguerre (or first Jacobi) parameter, if any.
    :param beta: Second Jacobi parameter, if any.
    '''

    def __init__(self, name, moment, q=None, base=None, lattice=None, sigma=None,
                 tau=None, ratio=None, alpha=None, beta=None):
        self.name = name
        self._moment = moment
        self._moments = {}
        self.q = q
        self.base = base
        self.lattice = lattice or {}
        self.sigma = sigma
        self.tau = tau
        self.ratio = ratio
        self.alpha = alpha
        self.beta = beta
        self.cache = {}

    @property
    def is_q(self):
        return self.q is not None

    @property
    def short_name(self):
        return next(short for short, name in SHORT_NAMES.items() if name == self.name)

    def moment(self, n):
        '''
        The ``n``-th moment, cached.
        '''
        if n not in self._moments:
            value = self._moment(n)
            if isinstance(value, int):
                value = self.one() * value
            self._moments[n] = value
        return self._moments[n]

    def one(self):
        '''
        The multiplicative identity of the weight's scalar ring.
        '''
        return self.q ** 0 if self.is_q else Fraction(1)

    def __repr__(self):
        if self.beta is not None:
            return 'WeightSpec({0}, alpha={1}, beta={2})'.format(self.name, self.alpha, self.beta)
        if self.alpha is not None:
            return 'WeightSpec({0}, alpha={1})'.format(self.name, self.alpha)
        return 'WeightSpec({0})'.format(self.name)


def stieltjes_wigert():
    '''
    Stieltjes-Wigert weight in the variable ``s`` (``q = s^2``) with moments
    ``q^(n/2) q^(-(n+1)^2/2) = s^-(n^2+n+1)``.
    '''
    q = S * S
    x = XPoly.x()
    sigma = x
    tau = (XPoly([1]) - x * q) * (1 / (1 - q))
    return WeightSpec(STIELTJES_WIGERT, lambda n: S ** (-(n * n + n + 1)), q=q,
                      base='s', lattice={'a': 0, 'b': 'infinity'}, sigma=sigma, tau=tau)


def discrete_q_hermite():
    '''
    Discrete q-Hermite weight on the lattice with terminals -1 and 1; odd
    moments vanish and ``mu_2k = (1 - q)(q; q^2)_k``.
    '''
    def moment(n):
        if n % 2:
            return Q * 0
        return (1 - Q) * qpochhammer(Q, n // 2, Q * Q)
    ratio = (XPoly([1]), XPoly([1, 0, -(Q * Q)]))
    sigma, tau = derive_pearson_pair(ratio[0], ratio[1], Q, endpoint=1)
    return WeightSpec(DISCRETE_Q_HERMITE, moment, q=Q, base='q',
                      lattice={'a': -1, 'b': 1}, sigma=sigma, tau=tau, ratio=ratio)


def little_q_laguerre(alpha=0):
    '''
    Little q-Laguerre weight with normalised moments
    ``nu_n = (q^(alpha+1); q)_n``.
    '''
    alpha = _check_alpha(alpha)
    ratio = (XPoly([Q ** alpha]), XPoly([1, -Q]))
    sigma, tau = derive_pearson_pair(ratio[0], ratio[1], Q, endpoint=1, lower=0)
    return WeightSpec(LITTLE_Q_LAGUERRE, lambda n: qpochhammer(Q ** (alpha + 1), n, Q),
                      q=Q, base='q', lattice={'a': 0, 'b': 1}, sigma=sigma, tau=tau,
                      ratio=ratio, alpha=alpha)


def gaussian():
    '''
    Gaussian weight ``exp(-x^2)``, normalised: ``mu_2k = (2k-1)!!/2^k``.
    '''
    def moment(n):
        if n % 2:
            return Fraction(0)
        return Fraction(double_factorial(n - 1), 2 ** (n // 2))
    return WeightSpec(GAUSSIAN, moment, sigma=XPoly([1]), tau=XPoly([0, -2]))


def laguerre(alpha=0):
    '''
    Laguerre weight ``x^alpha exp(-x)``, normalised: ``mu_n = (alpha+1)_n``.
    '''
    alpha = _check_alpha(alpha)
    return WeightSpec(LAGUERRE, lambda n: Fraction(rising_factorial(alpha + 1, n)),
                      sigma=XPoly([0, 1]), tau=XPoly([alpha + 1, -1]), alpha=alpha)


def jacobi(alpha=0, beta=0):
    '''
    Jacobi weight ``x^alpha (1-x)^beta`` on ``[0, 1]``, normalised:
    ``mu_n = (alpha+1)_n / (alpha+beta+2)_n``.
    '''
    alpha, beta = _check_alpha(alpha), _check_alpha(beta)
    return WeightSpec(JACOBI, lambda n: Fraction(rising_factorial(alpha + 1, n),
                                                 rising_factorial(alpha + beta + 2, n)),
                      sigma=XPoly([0, 1, -1]), tau=XPoly([alpha + 1, -(alpha + beta + 2)]),
                      alpha=alpha, beta=beta)


def _check_alpha(alpha):
    if int(alpha) != alpha or alpha < 0:
        raise ConfigError('alpha must be a non-negative integer, got {0}'.format(alpha))
    return int(alpha)


def weight_by_name(name, alpha=0, beta=0):
    '''
    Builds a weight from a full or short ensemble name.

    :raises ConfigError: for unknown names.
    '''
    name = SHORT_NAMES.get(name, name)
    if name == STIELTJES_WIGERT:
        return stieltjes_wigert()
    if name == DISCRETE_Q_HERMITE:
        return discrete_q_hermite()
    if name == LITTLE_Q_LAGUERRE:
        return little_q_laguerre(alpha)
    if name == GAUSSIAN:
        return gaussian()
    if name == LAGUERRE:
        return laguerre(alpha)
    if name == JACOBI:
        return jacobi(alpha, beta)
    raise ConfigError('Unknown ensemble \'{0}\''.format(name))


def weight_moment(weight, n):
    '''
    The ``n``-th moment of a weight.
    '''
    if n < 0:
        raise ConfigError('Moment index must be non-negative, got {0}'.format(n))
    return weight.moment(n)
