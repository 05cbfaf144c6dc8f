'''
q-Laplace transforms of polynomial measures as truncated series in
``lambda`` and the fourth order q-difference operator that annihilates the
transform of ``p_N^2 dmu / h_N`` on the exponential lattice.

A polynomial ``R(x)`` becomes the operator ``R(D_q)`` acting on series in
``lambda`` (:func:`lift`); the shifted forms ``R_m^(i)`` used by the product
rule come from :func:`op_lift`.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from concurrent.futures import ProcessPoolExecutor
from qmoments.exact_algebra import XPoly
from qmoments.q_operators.pearson import cn_eigenvalue, monic_polynomials, t_polynomial
from qmoments.q_operators.series import (FormalSeries, d_q, identity, mul_lambda,
                                         polynomial_in_d, resolvent, scalar, shift)
from qmoments.q_special import qbinomial, qinteger, qpochhammer
from qmoments.util import ConfigError


logger = logging.getLogger(__name__)

MINIMUM_ORDER = 10

MEASURE_KINDS = ('phi', 'psi1', 'psi2', 'psi3', 'psi4')


def series_from_measure(weight, integrand=None, order=24, scale=None):
    '''
    ``int e_q(lambda x) integrand(x) dmu`` as a series: the coefficient of
    ``lambda^k`` is ``(1-q)^k L[x^k integrand] / (q;q)_k``.

    :param weight: A q-weight :class:`WeightSpec`.
    :param integrand: :class:`XPoly` multiplying the weight (default 1).
    :param order: Number of coefficients.
    :param scale: Optional ring element multiplying every coefficient.
    :rtype: :class:`FormalSeries`
    '''
    if not weight.is_q:
        raise ConfigError('q-Laplace transform needs a q-weight, got {0}'.format(weight.name))
    q = weight.q
    integrand = integrand if integrand is not None else XPoly([1])
    factor = weight.one() if scale is None else weight.one() * scale
    coeffs = []
    for k in range(order):
        value = integrand.integrate(lambda index, k=k: weight.moment(index + k))
        coeffs.append(value * factor)
        factor = factor * (1 - q) / (1 - q ** (k + 1))
    return FormalSeries(coeffs, order)


def measure_series(weight, n, order=24):
    '''
    The transforms of ``p_N^2``, ``p_N D_(1/q) p_N``, ``p_N D_q p_N``,
    ``(D_(1/q) p_N)^2`` and ``D_(1/q) p_N D_q p_N``, each divided by ``h_N``.

    :returns: Dict keyed by :data:`MEASURE_KINDS`.
    '''
    q = weight.q
    polys, norms = monic_polynomials(weight, n + 1)
    poly, norm = polys[n], norms[n]
    forward = poly.q_derivative(q)
    backward = poly.q_inverse_derivative(q)
    integrands = {
        'phi': poly * poly,
        'psi1': poly * backward,
        'psi2': poly * forward,
        'psi3': backward * backward,
        'psi4': backward * forward,
    }
    scale = 1 / norm
    return dict((kind, series_from_measure(weight, integrand, order, scale))
                for kind, integrand in integrands.items())


def q_exponential(argument, base, order, step=1):
    '''
    ``e_p(argument lambda^step) = sum ((1-p) argument)^k / (p;p)_k
    lambda^(step k)`` truncated at ``order``.
    '''
    coeffs = [0] * order
    term = base ** 0
    for k in range(0, (order - 1) // step + 1):
        coeffs[k * step] = term
        term = term * (1 - base) * argument / (1 - base ** (k + 1))
    return FormalSeries(coeffs, order)


def dqh_phi0_closed_form(q, order=24):
    '''
    ``(1 - q) e_(q^2)((1 - q) lambda^2 / (1 + q))``, the transform of the
    discrete q-Hermite weight itself.
    '''
    return q_exponential((1 - q) / (1 + q), q * q, order, step=2) * (1 - q)


def lift(poly, q, label=None):
    '''
    ``R(x) -> R(D_q)``.
    '''
    coeffs = list(poly.coeffs) or [0]
    return polynomial_in_d(coeffs, q, label or 'lift[{0}]'.format(poly))


def op_lift(poly, m, i, q):
    '''
    ``R_m^(i)``: the ``i``-th q-derivative of ``R`` in ``x``, dilated by
    ``q^(m-i)``, then lifted.
    '''
    derived = poly
    for _ in range(i):
        derived = derived.q_derivative(q)
    return lift(derived.dilate(q ** (m - i)), q, 'R[{0}]_{1}^({2})'.format(poly, m, i))


def lift_product_rule_holds(poly, m, series, q):
    '''
    Checks ``R(lambda^m f) = sum_i lambda^(m-i) [m choose i]_q R_m^(i) f``.
    '''
    left = (lift(poly, q) * mul_lambda(m))(series)
    right = None
    for i in range(m + 1):
        term = (mul_lambda(m - i) * op_lift(poly, m, i, q))(series) * qbinomial(m, i, q)
        right = term if right is None else right + term
    return left == right


def leibniz_holds(series, n, q):
    '''
    Checks ``D_q^n(lambda f) = [n]_q D_q^(n-1) f + q^n lambda D_q^n f``.
    '''
    derivative = d_q(q)
    power = identity()
    for _ in range(n - 1):
        power = derivative * power
    left = (derivative * power * mul_lambda(1))(series)
    right = power(series) * qinteger(n, q) + (mul_lambda(1) * derivative * power)(series) * q ** n
    return left == right


class FourthOrder(object):

    '''
    The operators ``M_0 .. M_4`` of a weight at one ``N`` together with the
    ingredients they are assembled from.
    '''

    def __init__(self, weight, n, operators, constant):
        self.weight = weight
        self.n = n
        self.operators = operators
        self.constant = constant

    def __getitem__(self, index):
        return self.operators[index]

    def __iter__(self):
        return iter(self.operators)

    def __len__(self):
        return len(self.operators)

    def full(self):
        '''
        ``sum_i lambda^i M_i``.
        '''
        return combine(self.operators)


def combine(operators):
    '''
    ``sum_i lambda^i operators[i]``.
    '''
    total = operators[0]
    for power in range(1, len(operators)):
        total = total + mul_lambda(power) * operators[power]
    return total


def build_fourth_order(weight, n):
    '''
    Assembles ``[M_0, ..., M_4]`` from the Pearson pair of ``weight`` and the
    eigenvalue constant ``C_N``.

    :rtype: :class:`FourthOrder`
    '''
    q = weight.q
    sigma, tau = weight.sigma, weight.tau
    big_t = t_polynomial(sigma, tau, q)
    constant = cn_eigenvalue(weight, n)
    qinv = 1 / q
    up, down = shift(q, 1), shift(q, -1)
    r0, r1, r2 = resolvent(q, 0), resolvent(q, 1), resolvent(q, 2)
    a, b = lift(tau, q, 'A'), lift(sigma, q, 'B')

    def t(m, i):
        return op_lift(big_t, m, i, q)

    def al(m, i):
        return op_lift(tau, m, i, q)

    cubic = (1 + q + q * q) * qinv
    m4 = qinv * t(3, 0) * down * r2 * b
    m3 = ((cubic * t(3, 1) * down - q * q * al(2, 0)) * r2 * b
          + t(2, 0) * r1 * a)
    m2 = ((cubic * t(3, 2) * down - q * q * (1 + q) * al(2, 1) + scalar(2 * q * constant)) * r2 * b
          + ((1 + q) * t(2, 1) - q * q * al(1, 0) * up) * r1 * a
          + 2 * constant * t(1, 0) * r0)
    m1 = ((t(2, 2) - q * q * al(1, 1) * up + 2 * q * constant * up) * r1 * a
          + 2 * constant * (t(1, 1) - q * a * up) * r0)
    m0 = constant * constant * (4 * r0 * up - (identity() + up))
    logger.debug('fourth order operator of %s at N = %d assembled (C_N = %s)',
                 weight.name, n, constant)
    return FourthOrder(weight, n, [m0, m1, m2, m3, m4], constant)


def fourth_order_operator(weight, n):
    return build_fourth_order(weight, n).full()


class AnnihilationResult(object):

    '''
    Outcome of :func:`verify_annihilation`; ``failure`` is the first non-zero
    coefficient ``(index, value)`` of the image, if any.
    '''

    def __init__(self, weight, n, order, checked, failure=None, alpha=None):
        self.weight = weight
        self.n = n
        self.order = order
        self.checked = checked
        self.failure = failure
        self.alpha = alpha

    @property
    def passed(self):
        return self.failure is None

    def __bool__(self):
        return self.passed

    def as_dict(self):
        result = {'weight': self.weight, 'N': self.n, 'order': self.order,
                  'checked': self.checked, 'status': 'pass' if self.passed else 'fail'}
        if self.alpha is not None:
            result['alpha'] = self.alpha
        if self.failure is not None:
            result['failure'] = {'index': self.failure[0], 'value': str(self.failure[1])}
        return result


def verify_annihilation(weight, n, order=24):
    '''
    Applies ``sum_i lambda^i M_i`` to the transform of ``p_N^2 dmu / h_N``.

    :raises ConfigError: if ``order`` is below :data:`MINIMUM_ORDER`.
    :rtype: :class:`AnnihilationResult`
    '''
    if order < MINIMUM_ORDER:
        raise ConfigError('Annihilation check needs order >= {0}, got {1}'.format(
            MINIMUM_ORDER, order))
    phi = measure_series(weight, n, order)['phi']
    image = fourth_order_operator(weight, n)(phi)
    failure = image.first_nonzero()
    result = AnnihilationResult(weight.name, n, order, image.order, failure, weight.alpha)
    if failure is None:
        logger.info('%s N = %d annihilated through lambda^%d', weight.name, n, image.order - 1)
    else:
        logger.warning('%s N = %d: coefficient of lambda^%d is %s', weight.name, n,
                       failure[0], failure[1])
    return result


def _remote_annihilation(name, alpha, n, order):
    from qmoments.ensembles.weights import weight_by_name
    return verify_annihilation(weight_by_name(name, alpha), n, order)


def annihilation_checks(cases, order=24, workers=None):
    '''
    Runs :func:`verify_annihilation` for ``(name, alpha, N)`` cases, in
    worker processes when ``workers > 1``.

    :returns: List of :class:`AnnihilationResult` in case order.
    '''
    cases = list(cases)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_remote_annihilation, name, alpha, n, order)
                       for name, alpha, n in cases]
            return [future.result() for future in futures]
    return [_remote_annihilation(name, alpha, n, order) for name, alpha, n in cases]


def intermediate_identities(weight, n, order=24):
    '''
    Both sides of the five series identities linking the transforms of
    ``p_N^2``, ``p_N D p_N`` and ``(D p_N)^2`` that the fourth order equation
    is derived from.

    :returns: Dict ``name -> (left, right)`` of :class:`FormalSeries`.
    '''
    q = weight.q
    constant = cn_eigenvalue(weight, n)
    series = measure_series(weight, n, order)
    phi, psi1, psi2, psi3, psi4 = [series[kind] for kind in MEASURE_KINDS]
    big_t = lift(t_polynomial(weight.sigma, weight.tau, q), q, 'T')
    a, b = lift(weight.tau, q, 'A'), lift(weight.sigma, q, 'B')
    up, down = shift(q, 1), shift(q, -1)
    lam = mul_lambda(1)
    lattice = lift(XPoly([0, 1 - q]), q, 'F')
    qinv = 1 / q
    return {
        'qeq1': ((lam * down * b + q * a)(phi),
                 -(down * b)(psi1) - (q * big_t)(psi2)),
        'qeq2': ((lam * big_t)(psi2),
                 phi * constant - b(psi3) * qinv),
        'qeq3': ((lam * b)(psi1),
                 up(phi) * constant - b(psi3) * qinv),
        'qeq4': ((lam * b)(psi3),
                 (up * a)(psi4) + (up(psi1) + up(psi2)) * constant),
        'qeq5': (big_t(psi4),
                 b(psi3) + lattice(psi1) * constant),
    }


def dqh_display_operators(q, corrected=False):
    '''
    The operators multiplying ``lambda^0 .. lambda^4`` in the explicit
    fourth order equation for the discrete q-Hermite weight at ``N = 0``, as
    displayed.  With ``corrected`` the resolvent term at ``lambda^3`` takes
    the sign that makes the display proportional to :func:`build_fourth_order`.
    '''
    derivative = d_q(q)
    up, down = shift(q, 1), shift(q, -1)
    r1, r2 = resolvent(q, 1), resolvent(q, 2)
    second = derivative * derivative - identity()
    sign = 1 if corrected else -1
    m4 = (1 / q) * down * r2 * second
    m3 = (q ** 4 / (1 - q) * derivative * r2 * second
          + sign / (1 - q) * r1 * derivative)
    m2 = (q * q * (1 + q) / (1 - q) * r2 * second
          + q ** 3 / (1 - q) ** 2 * derivative * up * r1 * derivative)
    m1 = q * q / (1 - q) ** 2 * up * r1 * derivative
    m0 = scalar(q * 0)
    return [m0, m1, m2, m3, m4]


def display_annihilates(q, order=24, corrected=False):
    '''
    Whether the displayed ``N = 0`` discrete q-Hermite equation annihilates
    :func:`dqh_phi0_closed_form`.
    '''
    image = combine(dqh_display_operators(q, corrected))(dqh_phi0_closed_form(q, order))
    return image.is_zero()
