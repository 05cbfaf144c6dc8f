'''
Pearson pairs ``(sigma, tau)`` of q-classical weights: derivation from the
weight ratio, verification of the q-integration by parts identities, and the
eigenvalue of the second order q-difference operator.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from qmoments.exact_algebra import XPoly
from qmoments.exact_algebra.linalg import nullspace
from qmoments.exact_algebra.xpoly import stieltjes_polynomials
from qmoments.util import QMomentsError, NotEigenError


logger = logging.getLogger(__name__)


def t_polynomial(sigma, tau, q):
    '''
    ``T(x) = sigma(x) - (1 - q) x tau(x)``.
    '''
    return sigma - XPoly.x() * tau * (1 - q)


def derive_pearson_pair(ratio_num, ratio_den, q, endpoint=1, lower=None):
    '''
    Solves for ``sigma`` (degree <= 2, monic) and ``tau`` (degree <= 1) from
    the weight ratio ``w(qx)/w(x) = ratio_num/ratio_den = T(x)/sigma(qx)``
    together with the boundary condition ``sigma(endpoint) = 0`` and, for a
    lattice accumulating at a finite terminal, ``sigma(lower) = 0``.

    :param lower: Finite lower terminal of the lattice, or ``None``.

    :returns: Tuple ``(sigma, tau)`` of :class:`XPoly`.
    :raises QMomentsError: if the pair is not unique.
    '''
    one = Fraction(1)
    zero = Fraction(0)
    # Unknowns: s0, s1, s2, t0, t1
    t_forms = [[one, zero, zero, zero, zero],
               [zero, one, zero, -(1 - q), zero],
               [zero, zero, one, zero, -(1 - q)]]
    dilated = [[one, zero, zero, zero, zero],
               [zero, q, zero, zero, zero],
               [zero, zero, q * q, zero, zero]]
    size = 3 + max(len(ratio_num.coeffs), len(ratio_den.coeffs))
    rows = []
    for degree in range(size):
        row = [zero] * 5
        for index in range(3):
            den_coeff = ratio_den.coefficient(degree - index)
            num_coeff = ratio_num.coefficient(degree - index)
            for unknown in range(5):
                row[unknown] = (row[unknown] + t_forms[index][unknown] * den_coeff
                                - dilated[index][unknown] * num_coeff)
        rows.append(row)
    rows.append([one, Fraction(endpoint), Fraction(endpoint) ** 2, zero, zero])
    if lower is not None:
        # a constant ratio numerator of 1 leaves the degree 0 row empty
        rows.append([one, Fraction(lower), Fraction(lower) ** 2, zero, zero])
    basis = nullspace(rows, 5)
    if len(basis) != 1 or basis[0][2] == 0:
        raise QMomentsError('Pearson pair is not determined by the weight ratio')
    vector = [value / basis[0][2] for value in basis[0]]
    return XPoly(vector[:3]), XPoly(vector[3:])


class PearsonResult(object):

    '''
    Outcome of :func:`pearson_verify`; ``failure`` names the first
    offending identity and monomial pair.
    '''

    def __init__(self, weight, checked=0, failure=None):
        self.weight = weight
        self.checked = checked
        self.failure = failure

    @property
    def passed(self):
        return self.failure is None

    def __bool__(self):
        return self.passed

    def as_dict(self):
        return {'weight': self.weight, 'checked': self.checked,
                'status': 'pass' if self.passed else 'fail',
                'failure': self.failure}


def _monomial(power):
    return XPoly([0] * power + [1])


def pearson_verify(weight, max_degree=8):
    '''
    Verifies the ratio identity of a weight (when it has one) and the three
    integration by parts identities for all monomials ``f = x^a``,
    ``g = x^b`` with ``a + b <= max_degree``.

    :param weight: A q-classical :class:`WeightSpec`.
    :rtype: :class:`PearsonResult`
    '''
    q = weight.q
    sigma, tau = weight.sigma, weight.tau
    big_t = t_polynomial(sigma, tau, q)
    result = PearsonResult(weight.name)

    def integral(poly):
        return poly.integrate(weight.moment)

    if weight.ratio is not None:
        ratio_num, ratio_den = weight.ratio
        result.checked += 1
        if big_t * ratio_den != sigma.dilate(q) * ratio_num:
            result.failure = {'identity': 'ratio', 'a': None, 'b': None}
            return result
    for a in range(max_degree + 1):
        f = _monomial(a)
        result.checked += 1
        if integral(sigma * f) != q * integral(big_t * f.dilate(q)):
            result.failure = {'identity': 'ibp3', 'a': a, 'b': None}
            return result
        for b in range(max_degree + 1 - a):
            g = _monomial(b)
            result.checked += 2
            left = integral(sigma * f.q_derivative(q) * g)
            right = (-integral(tau * f.dilate(q) * g.dilate(q))
                     - integral(sigma * f.dilate(q) * g.q_derivative(q)))
            if left != right:
                result.failure = {'identity': 'ibp', 'a': a, 'b': b}
                return result
            left = integral(sigma * f.q_inverse_derivative(q) * g)
            right = (-q * integral(tau * f * g)
                     - integral(sigma * f.dilate(1 / q) * g.q_inverse_derivative(q)))
            if left != right:
                result.failure = {'identity': 'ibp2', 'a': a, 'b': b}
                return result
    logger.debug('Pearson pair of %s verified on %d identities', weight.name, result.checked)
    return result


def monic_polynomials(weight, count):
    '''
    Monic orthogonal polynomials ``p_0 .. p_{count-1}`` and norms of a weight.
    '''
    return stieltjes_polynomials(weight.moment, count)


def cn_eigenvalue(weight, n):
    '''
    The constant ``C_N`` with
    ``sigma D_q D_{1/q} p_N + tau D_q p_N + C_N p_N == 0``.

    :raises NotEigenError: if the residual does not vanish identically.
    '''
    q = weight.q
    polys, _ = monic_polynomials(weight, n + 1)
    poly = polys[n]
    image = (weight.sigma * poly.q_inverse_derivative(q).q_derivative(q)
             + weight.tau * poly.q_derivative(q))
    constant = -image.coefficient(n)
    residual = image + poly * constant
    if not residual.is_zero():
        raise NotEigenError('p_{0} is not an eigenfunction for {1}: residual {2}'.format(
            n, weight.name, residual))
    return constant
