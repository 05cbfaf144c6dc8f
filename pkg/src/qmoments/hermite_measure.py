'''
The discrete q-Hermite measure ``p_N^2 dmu / h_N``: recurrence data, the
linearisation of dilated polynomials ``p_n(q^k x)`` in monic form and the
moments of the measure obtained from it.

Orthonormal polynomials carry square roots of ``1 - q^n``; every statement
here is recast for the monic ``p_n``, which multiplies each orthonormal
coefficient by ``prod d_(n-i) = sqrt(h_n / h_(n-2l))`` and keeps all values in
``Q(q)``.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from qmoments.audit import IdentityCheck
from qmoments.ensembles import weights
from qmoments.ensembles.density import density_moment_closed
from qmoments.exact_algebra import XPoly, Q
from qmoments.q_operators.pearson import monic_polynomials
from qmoments.q_special import qbinomial, qpochhammer
from qmoments.util import ConfigError


logger = logging.getLogger(__name__)


class RecurrenceData(object):

    '''
    ``d_n^2 = q^(n-1) (1 - q^n)`` and the monic norms
    ``h_n = prod_(i<=n) d_i^2`` (relative to ``h_0 = 1``).
    '''

    def __init__(self, q=Q):
        self.q = q
        self._h = {0: q ** 0}

    def d_sq(self, n):
        if n < 1:
            raise ConfigError('d_n is defined for n >= 1, got {0}'.format(n))
        return self.q ** (n - 1) * (1 - self.q ** n)

    def h(self, n):
        if n not in self._h:
            self._h[n] = self.h(n - 1) * self.d_sq(n)
        return self._h[n]

    def d_sq_product(self, n, count):
        '''
        ``prod_(i<count) d_(n-i)^2``.
        '''
        result = self.q ** 0
        for i in range(count):
            result = result * self.d_sq(n - i)
        return result


def _check(name, value):
    if value < 0:
        raise ConfigError('{0} must be non-negative, got {1}'.format(name, value))


def linearisation_monic(n, k, q=Q):
    '''
    ``c_l`` with ``p_n(q^k x) = sum_l c_l p_(n-2l)(x)``::

        c_l = (-1)^l q^((k-l)(n-2l) + l(l-n)) [k choose k-l]_(q^2)
              prod_(i<2l) d_(n-i)^2

    :returns: List ``[c_0, ..., c_L]`` with ``L = min(k, n // 2)``.
    '''
    _check('n', n)
    _check('k', k)
    data = RecurrenceData(q)
    coefficients = []
    for l in range(min(k, n // 2) + 1):
        sign = -1 if l % 2 else 1
        coefficients.append(sign * q ** ((k - l) * (n - 2 * l) + l * (l - n))
                            * qbinomial(k, k - l, q * q) * data.d_sq_product(n, 2 * l))
    return coefficients


def _dqh_polynomials(count):
    weight = weights.discrete_q_hermite()
    return monic_polynomials(weight, count)


def linearisation_oracle(n, k):
    '''
    Expands ``p_n(q^k x)`` in ``p_n, p_(n-1), ..., p_0`` by eliminating
    leading terms.

    :returns: List of coefficients indexed by the degree drop ``n - m``.
    '''
    polys, _ = _dqh_polynomials(n + 1)
    remainder = polys[n].dilate(Q ** k)
    coefficients = []
    for degree in range(n, -1, -1):
        coeff = remainder.coefficient(degree)
        coefficients.append(coeff)
        remainder = remainder - polys[degree] * coeff
    if not remainder.is_zero():
        raise ArithmeticError('Elimination left a remainder {0}'.format(remainder))
    return coefficients


def linearisation_holds(n, k):
    '''
    Whether :func:`linearisation_monic` is an exact polynomial identity.
    '''
    polys, _ = _dqh_polynomials(n + 1)
    right = XPoly()
    for l, coeff in enumerate(linearisation_monic(n, k)):
        right = right + polys[n - 2 * l] * coeff
    return polys[n].dilate(Q ** k) == right


def linearisation_audit(n_max=6, k_max=4):
    '''
    Compares the printed coefficients with :func:`linearisation_oracle` on
    every ``(n, k, l)`` cell, odd degree drops included (they must vanish).
    '''
    check = IdentityCheck('dqh_linearisation')
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            printed = linearisation_monic(n, k)
            oracle = linearisation_oracle(n, k)
            for drop, truth in enumerate(oracle):
                if drop % 2:
                    value = Q * 0
                else:
                    value = printed[drop // 2] if drop // 2 < len(printed) else Q * 0
                check.check(value, truth, n=n, k=k, drop=drop)
    return check.entry()


def shifted_moment_M(k, n, q=Q):
    '''
    ``M_(k,N) = int prod_(i<k) (1 - q^(-2i) x^2) p_N^2 dmu / h_N`` in closed
    form::

        q^k sum_l q^(2kN + l(4l-4k-2N-1)) [k choose k-l]_(q^2)^2
                  (q;q)_N / (q;q)_(N-2l)
    '''
    _check('k', k)
    _check('N', n)
    total = q * 0
    for l in range(min(k, n // 2) + 1):
        ratio = qpochhammer(q ** (n - 2 * l + 1), 2 * l, q)
        binomial = qbinomial(k, k - l, q * q)
        total = total + q ** (2 * k * n + l * (4 * l - 4 * k - 2 * n - 1)) * binomial * binomial * ratio
    return total * q ** k


def _product_polynomial(k, q=Q):
    '''
    ``prod_(i<k) (1 - q^(-2i) x^2)``.
    '''
    result = XPoly([1])
    for i in range(k):
        result = result * XPoly([1, 0, -(q ** (-2 * i))])
    return result


def shifted_moment_oracle(k, n):
    '''
    ``M_(k,N)`` from the weight moments and the Hankel built ``p_N``.
    '''
    weight = weights.discrete_q_hermite()
    polys, norms = monic_polynomials(weight, n + 1)
    integrand = _product_polynomial(k) * polys[n] * polys[n]
    return integrand.integrate(weight.moment) / norms[n]


def squared_moment(p, n, q=Q):
    '''
    ``m_(2p,N) = int x^(2p) p_N^2 dmu / h_N =
    sum_i (-1)^i q^(i(i-1)) [p choose i]_(q^2) M_(i,N)``.
    '''
    _check('p', p)
    total = q * 0
    for i in range(p + 1):
        term = q ** (i * (i - 1)) * qbinomial(p, i, q * q) * shifted_moment_M(i, n, q)
        total = total - term if i % 2 else total + term
    return total


def squared_moment_difference(p, n):
    '''
    ``m_(2p,N+1) - m_(2p,N)`` of the discrete q-Hermite spectral density.
    '''
    weight = weights.discrete_q_hermite()
    return density_moment_closed(weight, 2 * p, n + 1) - density_moment_closed(weight, 2 * p, n)


def monomial_expansion_holds(p, q=Q):
    '''
    Checks ``x^(2p) = sum_i (-1)^i q^(i(i-1)) [p choose i]_(q^2)
    prod_(j<i) (1 - q^(-2j) x^2)``.
    '''
    total = XPoly()
    for i in range(p + 1):
        coeff = q ** (i * (i - 1)) * qbinomial(p, i, q * q)
        total = total + _product_polynomial(i, q) * (-coeff if i % 2 else coeff)
    return total == XPoly([0] * (2 * p) + [q ** 0])


def dilation_holds(poly, q=Q):
    '''
    Checks ``q int f(qx) dmu = int (1 - x^2) f(x) dmu`` for the discrete
    q-Hermite weight.
    '''
    weight = weights.discrete_q_hermite()
    left = poly.dilate(q).integrate(weight.moment) * q
    right = (XPoly([1, 0, -1]) * poly).integrate(weight.moment)
    return left == right


def path_generating_function(k, l, q=Q):
    '''
    ``f_k^l`` from ``q^(2k) f_k^(l-1) + f_(k-1)^l = f_k^l`` with
    ``f_0^l = 1`` and ``f_k^0 = 0`` for ``k >= 1``.
    '''
    table = {}

    def value(kk, ll):
        if kk == 0:
            return q ** 0
        if ll == 0:
            return q * 0
        if (kk, ll) not in table:
            table[(kk, ll)] = q ** (2 * kk) * value(kk, ll - 1) + value(kk - 1, ll)
        return table[(kk, ll)]
    return value(k, l)


def path_closed_form(k, l, q=Q):
    '''
    ``[l - 1 + k choose k]_(q^2)``.
    '''
    if l == 0:
        return q ** 0 if k == 0 else q * 0
    return q ** 0 * qbinomial(l - 1 + k, k, q * q)
