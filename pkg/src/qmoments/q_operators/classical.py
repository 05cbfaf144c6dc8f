'''
Differential equations for the Laplace transform of ``P_N(x)^2 w(x)`` in the
classical (Hermite, Laguerre, Jacobi) cases, assembled from the Pearson pair
and checked on the exponential generating function of the moments.

Series here are in ``s``; ``d/ds`` is the q-derivative at ``q = 1``.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from qmoments.audit import IdentityCheck
from qmoments.ensembles import weights
from qmoments.exact_algebra import XPoly
from qmoments.exact_algebra.xpoly import stieltjes_polynomials
from qmoments.q_operators.laplace import AnnihilationResult, combine, lift
from qmoments.q_operators.series import FormalSeries, d_q, identity, mul_lambda, scalar
from qmoments.util import ConfigError, NotEigenError
from qmoments.util.math import factorial


logger = logging.getLogger(__name__)

ONE = Fraction(1)

CLASSICAL_WEIGHTS = (weights.GAUSSIAN, weights.LAGUERRE, weights.JACOBI)


def _check_classical(weight):
    if weight.name not in CLASSICAL_WEIGHTS:
        raise ConfigError('Classical equation needs a Hermite, Laguerre or Jacobi weight, '
                          'got {0}'.format(weight.name))


def classical_eigenvalue(weight, n):
    '''
    ``lambda_N = -(N(N-1) sigma_2 + N tau_1)`` with
    ``sigma P_N'' + tau P_N' + lambda_N P_N = 0``.

    :raises NotEigenError: if the monic ``P_N`` leaves a residual.
    '''
    sigma, tau = weight.sigma, weight.tau
    value = -(n * (n - 1) * sigma.coefficient(2) + n * tau.coefficient(1))
    polys, _ = stieltjes_polynomials(weight.moment, n + 1)
    poly = polys[n]
    residual = (sigma * poly.derivative().derivative() + tau * poly.derivative()
                + poly * value)
    if not residual.is_zero():
        raise NotEigenError('P_{0} is not an eigenfunction for {1}: residual {2}'.format(
            n, weight.name, residual))
    return value


def moment_series(weight, n, order=30):
    '''
    ``sum_k L[x^k P_N^2] s^k / k!``, the Laplace transform of the
    un-normalised measure.
    '''
    polys, _ = stieltjes_polynomials(weight.moment, n + 1)
    square = polys[n] * polys[n]
    coeffs = [square.integrate(lambda index, k=k: weight.moment(index + k)) / factorial(k)
              for k in range(order)]
    return FormalSeries(coeffs, order)


def classical_operators(weight, n):
    '''
    ``[0, M_1, M_2, M_3, M_4]`` in terms of ``A = tau(d/ds)``,
    ``B = sigma(d/ds)`` and their ``x``-derivatives.
    '''
    _check_classical(weight)
    sigma, tau = weight.sigma, weight.tau
    eigen = classical_eigenvalue(weight, n)
    a = lift(tau, ONE, 'A')
    a1 = lift(tau.derivative(), ONE, "A'")
    a2 = lift(tau.derivative().derivative(), ONE, "A''")
    b = lift(sigma, ONE, 'B')
    b1 = lift(sigma.derivative(), ONE, "B'")
    b2 = lift(sigma.derivative().derivative(), ONE, "B''")
    m1 = b2 * a - a2 * b - a1 * a + 2 * eigen * b1
    m2 = 3 * b2 * b + 2 * b1 * a + 4 * eigen * b - a * a - 2 * a1 * b
    m3 = 3 * b1 * b
    m4 = b * b
    return [scalar(Fraction(0)), m1, m2, m3, m4]


def classical_ode_check(weight, n, order=30):
    '''
    Applies ``sum_i s^i M_i`` to :func:`moment_series`.

    :rtype: :class:`AnnihilationResult`
    '''
    image = combine(classical_operators(weight, n))(moment_series(weight, n, order))
    failure = image.first_nonzero()
    if failure is not None:
        logger.warning('%s N = %d: coefficient of s^%d is %s', weight.name, n, *failure)
    result = AnnihilationResult(weight.name, n, order, image.order, failure, weight.alpha)
    return result


def display_operator(display):
    '''
    ``sum_j display[j](s) d^j/ds^j`` for a dict of :class:`XPoly` in ``s``.
    '''
    derivative = d_q(ONE)
    total = None
    for power, poly in sorted(display.items()):
        derived = identity()
        for _ in range(power):
            derived = derivative * derived
        for exponent, coeff in enumerate(poly.coeffs):
            if coeff == 0:
                continue
            term = coeff * mul_lambda(exponent) * derived if exponent else coeff * derived
            total = term if total is None else total + term
    return total


def hermite_display(n):
    '''
    ``4s Phi'' + 4 Phi' - (s^3 + (8N+4)s) Phi``.
    '''
    return {2: XPoly([0, 4]), 1: XPoly([4]), 0: XPoly([0, -(8 * n + 4), 0, -1])}


def laguerre_display(n, a):
    '''
    ``(s^3-s) Phi'' + (3s^2 + 2(2N+a+1)s - 1) Phi' + (s(1-a^2) + a+1+2N) Phi``.
    '''
    return {2: XPoly([0, -1, 0, 1]),
            1: XPoly([-1, 2 * (2 * n + a + 1), 3]),
            0: XPoly([a + 1 + 2 * n, 1 - a * a])}


def jacobi_display(n, a, b, printed=True):
    '''
    The fourth order Jacobi equation.  As displayed the constant part of the
    ``Phi'`` coefficient carries ``(a+b)(a+b+4)``; ``printed=False`` gives the
    value ``(a+b)(a+b+2)`` that the assembled operator produces.
    '''
    eigen = n * (n + a + b + 1)
    offset = 4 if printed else 2
    return {4: XPoly([0, 0, 0, 1]),
            3: XPoly([0, 0, 6, -2]),
            2: XPoly([0, 6 - 4 * eigen - (a + b) * (a + b + 2), -9, 1]),
            1: XPoly([-(a + b) * (a + b + offset) - 4 * eigen,
                      4 * eigen + 2 * (a + 1) * (a + b) - 6, 3]),
            0: XPoly([(a + b) * (a + 1) + 2 * eigen, 1 - a * a])}


def classical_display(weight, n, printed=True):
    _check_classical(weight)
    if weight.name == weights.GAUSSIAN:
        return hermite_display(n)
    if weight.name == weights.LAGUERRE:
        return laguerre_display(n, weight.alpha)
    return jacobi_display(n, weight.alpha, weight.beta, printed)


def _probe_series(order):
    return FormalSeries([Fraction(k * k + 1, k + 2) for k in range(order)], order)


DISPLAY_NOTES = {
    weights.GAUSSIAN: 'displayed equation is -1/s times the assembled operator',
    weights.JACOBI: 'displayed constant -(a+b)(a+b+4) in the Phi\' coefficient read as '
                    '-(a+b)(a+b+2)',
}


def display_audit(weight, n, order=16):
    '''
    Compares ``s`` times the displayed equation with the assembled operator
    on a generic series.

    :rtype: :class:`AuditEntry`
    '''
    printed = weight.name != weights.JACOBI
    display = mul_lambda(1) * display_operator(classical_display(weight, n, printed))
    assembled = combine(classical_operators(weight, n))
    probe = _probe_series(order)
    check = IdentityCheck('classical_display', weight.name, DISPLAY_NOTES.get(weight.name))
    left, right = display(probe), assembled(probe)
    for index in range(min(left.order, right.order)):
        check.check(left[index], right[index], N=n, alpha=weight.alpha, beta=weight.beta,
                    s=index)
    return check.entry()


def display_matches(weight, n, printed=True, order=16):
    '''
    Whether ``s`` times the display equals the assembled operator exactly.
    '''
    display = mul_lambda(1) * display_operator(classical_display(weight, n, printed))
    probe = _probe_series(order)
    return display(probe) == combine(classical_operators(weight, n))(probe)
