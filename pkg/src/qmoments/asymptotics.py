'''
Large ``N`` behaviour at ``q = exp(-lambda/N)``: floating point probes of the
scaled moments ``m_(k,N)/N``, Richardson extrapolation of the leading term in
the ``1/N^2`` expansion, and the limiting Stieltjes-Wigert density.

Exact closed forms are evaluated by passing an extended precision ``mpmath``
value of ``q`` (or ``s``) through the same functions that build the exact
:class:`RatFuncQ` values; only the final values are rounded to doubles.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from concurrent.futures import ProcessPoolExecutor
import mpmath
import numpy as np
from scipy.integrate import quad
from qmoments.ensembles.coefficients import dqh_expansion_coefficients
from qmoments.ensembles.density import dqh_moment_sum, sw_moment_little_q_jacobi
from qmoments.ensembles.genfunc import sw_partial_fraction_coefficient
from qmoments.settings import ASYMPTOTIC_DEFAULTS
from qmoments.util import ConfigError, IllConditionedError, QuadratureFailure
from qmoments.util.math import double_factorial, factorial


logger = logging.getLogger(__name__)

PROBE_ENSEMBLES = ('sw', 'dqh')

X_CONVENTIONS = ('e^lambda', 'e^-lambda')


def _settings(overrides):
    values = dict(ASYMPTOTIC_DEFAULTS)
    values.update(dict((key, value) for key, value in overrides.items() if value is not None))
    return values


def scaled_moment(ensemble, k, lam, n, digits=None):
    '''
    The moment divided by ``N`` at ``q = exp(-lambda/N)``, normalised so that
    it is invariant under ``q -> 1/q`` up to sign: ``q^((N-1/2)k) m_(k,N)``
    for ``sw`` and ``q^k m_(2k,N)`` for ``dqh``.  Both share the leading
    term of ``m/N`` (after the rescaling of the Stieltjes-Wigert variable)
    and expand in even powers of ``1/N``.
    '''
    if ensemble not in PROBE_ENSEMBLES:
        raise ConfigError('No scaled probe for ensemble \'{0}\''.format(ensemble))
    digits = digits or ASYMPTOTIC_DEFAULTS['precision_digits']
    with mpmath.workdps(digits):
        lam = mpmath.mpf(lam)
        if ensemble == 'sw':
            s = mpmath.exp(-lam / (2 * n))
            value = sw_moment_little_q_jacobi(k, n, s=s) * s ** ((2 * n - 1) * k)
        else:
            q = mpmath.exp(-lam / n)
            value = dqh_moment_sum(k, n, q=q) * q ** k
        return float(value / n)


class ScalingProbe(object):

    '''
    Values ``m_(k,N)/N`` over an increasing list of ``N``.
    '''

    def __init__(self, ensemble, k, lam, n_values, values):
        n_values = list(n_values)
        if any(later <= earlier for earlier, later in zip(n_values, n_values[1:])):
            raise ConfigError('N values must be strictly increasing: {0}'.format(n_values))
        if not all(np.isfinite(values)):
            raise ConfigError('Probe values must be finite')
        self.ensemble = ensemble
        self.k = k
        self.lam = lam
        self.n_values = n_values
        self.values = list(values)

    def rows(self):
        for n, value in zip(self.n_values, self.values):
            yield self.ensemble, self.k, self.lam, n, value


def scaling_probe(ensemble, k, lam, n_values=None, digits=None):
    '''
    :rtype: :class:`ScalingProbe`
    '''
    n_values = list(n_values or ASYMPTOTIC_DEFAULTS['n_values'])
    values = [scaled_moment(ensemble, k, lam, n, digits) for n in n_values]
    logger.debug('%s probe k = %d lambda = %s: %s', ensemble, k, lam, values)
    return ScalingProbe(ensemble, k, lam, n_values, values)


class Extrapolation(object):

    '''
    Least squares fit ``a + b/N^2 + c/N^4``: ``leading`` is ``a``,
    ``residual`` the largest absolute misfit and ``change`` the shift of
    ``a`` when the largest ``N`` is dropped.
    '''

    def __init__(self, leading, coefficients, residual, change, condition):
        self.leading = leading
        self.coefficients = coefficients
        self.residual = residual
        self.change = change
        self.condition = condition


def _fit(n_values, values, powers, condition_limit):
    n_array = np.asarray(n_values, dtype=float)
    matrix = np.column_stack([n_array ** (-power) for power in powers])
    condition = np.linalg.cond(matrix)
    if not np.isfinite(condition) or condition > condition_limit:
        raise IllConditionedError('Fit matrix condition number {0:.3g} exceeds {1:.3g}'.format(
            condition, condition_limit))
    coefficients, _, _, _ = np.linalg.lstsq(matrix, np.asarray(values, dtype=float), rcond=None)
    return coefficients, matrix, condition


def extrapolate_leading(probe, condition_limit=None, powers=(0, 2, 4)):
    '''
    Richardson fit of the probe values.

    :raises ConfigError: with fewer than three values.
    :raises IllConditionedError: if the fit matrix is near singular.
    :rtype: :class:`Extrapolation`
    '''
    if len(probe.values) < 3:
        raise ConfigError('Extrapolation needs at least 3 values, got {0}'.format(len(probe.values)))
    condition_limit = condition_limit or ASYMPTOTIC_DEFAULTS['condition_limit']
    powers = powers[:len(probe.values)]
    coefficients, matrix, condition = _fit(probe.n_values, probe.values, powers, condition_limit)
    residual = float(np.max(np.abs(matrix.dot(coefficients) - np.asarray(probe.values))))
    change = 0.0
    if len(probe.values) > 3:
        shorter, _, _ = _fit(probe.n_values[:-1], probe.values[:-1], powers[:len(probe.values) - 1],
                             condition_limit)
        change = abs(float(shorter[0] - coefficients[0]))
    return Extrapolation(float(coefficients[0]), [float(value) for value in coefficients],
                         residual, change, float(condition))


def odd_term_ratio(probe, condition_limit=None):
    '''
    ``|b| / |a|`` for the interpolation ``a + b/N + c/N^2 + d/N^4``; small
    when the expansion is even in ``1/N``.
    '''
    if len(probe.values) < 4:
        raise ConfigError('Odd term test needs at least 4 values')
    condition_limit = condition_limit or ASYMPTOTIC_DEFAULTS['condition_limit']
    coefficients, _, _ = _fit(probe.n_values[-4:], probe.values[-4:], (0, 1, 2, 4), condition_limit)
    return abs(coefficients[1]) / abs(coefficients[0])


def convergence_ratios(probe):
    '''
    Ratios of successive differences ``|v_i - v_(i-1)|``; about 4 when ``N``
    doubles and the corrections are ``O(1/N^2)``.
    '''
    steps = [abs(later - earlier) for earlier, later in zip(probe.values, probe.values[1:])]
    return [earlier / later for earlier, later in zip(steps, steps[1:]) if later != 0]


def sw_leading_target(k, lam):
    '''
    ``((-1)^k / (lambda k)) 2F1(-k, k; 1; e^lambda)`` (1 for ``k = 0``).
    '''
    if k == 0:
        return 1.0
    with mpmath.workdps(ASYMPTOTIC_DEFAULTS['precision_digits']):
        lam = mpmath.mpf(lam)
        value = (-1) ** k / (lam * k) * mpmath.hyp2f1(-k, k, 1, mpmath.exp(lam))
        return float(value)


def dqh_coefficient_limit(k, p, lam):
    '''
    ``lim c_p / N`` at ``q = exp(-lambda/N)`` for the expansion
    ``q^k m_(2k,N) = sum_p c_p q^(pN)``.
    '''
    if p == 0:
        return 1.0 / (k * lam)
    if p < max(k, 1) or p > 2 * k:
        return 0.0
    sign = -1 if (k + p - 1) % 2 else 1
    return (sign * 2.0 / (p * lam) * 2 ** (k - 1) * double_factorial(2 * k - 1)
            / (factorial(p - k) * factorial(2 * k - p)))


def dqh_leading_target(k, lam):
    '''
    ``sum_p lim(c_p / N) e^(-lambda p)``, the leading term of ``m_(2k,N)/N``.
    '''
    return sum(dqh_coefficient_limit(k, p, lam) * np.exp(-lam * p) for p in range(2 * k + 1))


def dqh_leading_printed(k, lam, x):
    '''
    The leading term as displayed, divided by ``lambda``::

        2/k - delta_(k,1) x + (-1)^(k-1) sum_(p=k, p!=1)^(2k) (-1)^p (2/p)
            (2(p-1))!! (2k-1)!! / ((2(p-k))!! (p-1)! (2k-p)!) x^p
    '''
    total = 2.0 / k - (x if k == 1 else 0.0)
    for p in range(max(k, 2), 2 * k + 1):
        term = (2.0 / p * double_factorial(2 * (p - 1)) * double_factorial(2 * k - 1)
                / (double_factorial(2 * (p - k)) * factorial(p - 1) * factorial(2 * k - p)))
        total += (-1) ** (k - 1 + p) * term * x ** p
    return total / lam


def leading_target(ensemble, k, lam):
    if ensemble == 'sw':
        return sw_leading_target(k, lam)
    if ensemble == 'dqh':
        return dqh_leading_target(k, lam)
    raise ConfigError('No leading term for ensemble \'{0}\''.format(ensemble))


def relative_error(value, target):
    if target == 0:
        return abs(value)
    return abs(value - target) / abs(target)


class ProbeResult(object):

    '''
    A probe, its extrapolation and the comparison with the closed leading
    term.  With four or more ``N`` values the fitted ``1/N`` coefficient must
    also stay below ``odd_limit`` relative to the leading term.
    '''

    def __init__(self, probe, extrapolation, target, tolerance, odd_ratio=None, odd_limit=None):
        self.probe = probe
        self.extrapolation = extrapolation
        self.target = target
        self.tolerance = tolerance
        self.error = relative_error(extrapolation.leading, target)
        self.odd_ratio = odd_ratio
        self.odd_limit = odd_limit if odd_limit is not None else ASYMPTOTIC_DEFAULTS['odd_term_ratio']

    @property
    def passed(self):
        if self.odd_ratio is not None and self.odd_ratio > self.odd_limit:
            return False
        return self.error <= self.tolerance

    def as_dict(self):
        result = {'ensemble': self.probe.ensemble, 'k': self.probe.k, 'lambda': self.probe.lam,
                  'N': self.probe.n_values, 'leading': self.extrapolation.leading,
                  'target': self.target, 'relative_error': self.error,
                  'convergence': convergence_ratios(self.probe),
                  'status': 'pass' if self.passed else 'fail'}
        if self.odd_ratio is not None:
            result['odd_term_ratio'] = float(self.odd_ratio)
        return result


def probe_check(ensemble, k, lam, n_values=None, tolerance=None):
    '''
    :rtype: :class:`ProbeResult`
    '''
    if tolerance is None:
        tolerance = 1e-6 if ensemble == 'sw' else 1e-5
    probe = scaling_probe(ensemble, k, lam, n_values)
    odd = odd_term_ratio(probe) if len(probe.values) >= 4 else None
    result = ProbeResult(probe, extrapolate_leading(probe), leading_target(ensemble, k, lam),
                         tolerance, odd)
    logger.info('%s k = %d lambda = %s: leading %.12g target %.12g', ensemble, k, lam,
                result.extrapolation.leading, result.target)
    return result


def probe_checks(cases, n_values=None, workers=None):
    '''
    :func:`probe_check` over ``(ensemble, k, lambda)`` cases, in worker
    processes when ``workers > 1``.
    '''
    cases = list(cases)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(probe_check, ensemble, k, lam, n_values)
                       for ensemble, k, lam in cases]
            return [future.result() for future in futures]
    return [probe_check(ensemble, k, lam, n_values) for ensemble, k, lam in cases]


def display_convention_errors(k, lam, leading):
    '''
    Relative errors of the displayed discrete q-Hermite leading term under
    each of :data:`X_CONVENTIONS` against an extrapolated ``leading`` value.
    '''
    points = {'e^lambda': np.exp(lam), 'e^-lambda': np.exp(-lam)}
    return dict((name, relative_error(dqh_leading_printed(k, lam, points[name]), leading))
                for name in X_CONVENTIONS)


def matching_convention(errors, tolerance):
    '''
    The first of :data:`X_CONVENTIONS` whose error is within ``tolerance``,
    or ``None``.
    '''
    for name in X_CONVENTIONS:
        if errors[name] <= tolerance:
            return name
    return None


def x_convention_check(k, lam, n_values=None):
    '''
    Relative errors of the displayed discrete q-Hermite leading term under
    ``x = e^lambda`` and ``x = e^-lambda`` and of the derived leading term,
    against the extrapolated probe.
    '''
    leading = extrapolate_leading(scaling_probe('dqh', k, lam, n_values)).leading
    errors = display_convention_errors(k, lam, leading)
    errors['derived'] = relative_error(dqh_leading_target(k, lam), leading)
    logger.info('d-qH k = %d lambda = %s x convention errors: %s', k, lam, errors)
    return errors


def sw_scaled_coefficient(k, index, lam, n):
    '''
    ``q^(-s) b_s / N`` at ``q = exp(-lambda/N)``; ``q^(-s) b_s`` are the
    partial fraction coefficients of the product form, odd under
    ``q -> 1/q``, and share the limit of ``b_s / N``.
    '''
    with mpmath.workdps(ASYMPTOTIC_DEFAULTS['precision_digits']):
        s = mpmath.exp(-mpmath.mpf(lam) / (2 * n))
        return float(sw_partial_fraction_coefficient(k, index, s) * s ** (-2 * index) / n)


def sw_coefficient_limit(k, index, lam):
    '''
    ``(-1)^s (2k-s-1)! / (lambda s! ((k-s)!)^2)``.
    '''
    sign = -1 if index % 2 else 1
    return sign * factorial(2 * k - index - 1) / (lam * factorial(index) * factorial(k - index) ** 2)


def dqh_scaled_coefficients(k, lam, n, coefficients=None):
    '''
    The extracted ``c_p / N`` evaluated at ``q = exp(-lambda/N)``.
    '''
    if coefficients is None:
        coefficients = dqh_expansion_coefficients(k)
    with mpmath.workdps(ASYMPTOTIC_DEFAULTS['precision_digits']):
        q = mpmath.exp(-mpmath.mpf(lam) / n)
        return [float(value.eval(q) / n) if value != 0 else 0.0 for value in coefficients]


class CoefficientResult(object):

    '''
    The extrapolated ``N -> infinity`` limit of one scaled expansion
    coefficient against its closed form.
    '''

    def __init__(self, ensemble, k, lam, index, extrapolation, target, tolerance):
        self.ensemble = ensemble
        self.k = k
        self.lam = lam
        self.index = index
        self.extrapolation = extrapolation
        self.target = target
        self.tolerance = tolerance
        if target == 0:
            self.error = abs(extrapolation.leading)
        else:
            self.error = relative_error(extrapolation.leading, target)

    @property
    def passed(self):
        return self.error <= self.tolerance

    def as_dict(self):
        return {'ensemble': self.ensemble, 'k': self.k, 'lambda': self.lam, 'index': self.index,
                'leading': self.extrapolation.leading, 'target': self.target,
                'relative_error': self.error, 'status': 'pass' if self.passed else 'fail'}


def coefficient_limit_check(ensemble, k, lam, n_values=None, tolerance=1e-5):
    '''
    Extrapolates every scaled expansion coefficient of ``ensemble`` (``b_s``
    for ``sw``, ``c_p`` for ``dqh``) and compares with its limit.

    :returns: List of :class:`CoefficientResult`, one per coefficient.
    '''
    n_values = list(n_values or ASYMPTOTIC_DEFAULTS['n_values'])
    if ensemble == 'sw':
        count = k + 1
        table = [[sw_scaled_coefficient(k, index, lam, n) for index in range(count)]
                 for n in n_values]
        targets = [sw_coefficient_limit(k, index, lam) for index in range(count)]
    elif ensemble == 'dqh':
        exact = dqh_expansion_coefficients(k)
        count = len(exact)
        table = [dqh_scaled_coefficients(k, lam, n, exact) for n in n_values]
        targets = [dqh_coefficient_limit(k, p, lam) for p in range(count)]
    else:
        raise ConfigError('No coefficient expansion for ensemble \'{0}\''.format(ensemble))
    results = []
    for index in range(count):
        probe = ScalingProbe(ensemble, k, lam, n_values, [row[index] for row in table])
        results.append(CoefficientResult(ensemble, k, lam, index, extrapolate_leading(probe),
                                         targets[index], tolerance))
    return results


def limiting_density(x, lam):
    '''
    ``(1/(pi lambda x)) arctan(sqrt(4 e^lambda x - (1+x)^2) / (1+x))`` on
    the support, 0 elsewhere.
    '''
    radicand = 4.0 * np.exp(lam) * x - (1.0 + x) ** 2
    if x <= 0 or radicand <= 0:
        return 0.0
    return np.arctan(np.sqrt(radicand) / (1.0 + x)) / (np.pi * lam * x)


def density_support(lam):
    '''
    ``z_(+-) = (2e^lambda - 1) +- sqrt((2e^lambda - 1)^2 - 1)``.
    '''
    if lam <= 0:
        raise ConfigError('lambda must be positive, got {0}'.format(lam))
    centre = 2.0 * np.exp(lam) - 1.0
    width = np.sqrt(centre * centre - 1.0)
    return centre - width, centre + width


def density_moment(k, lam, tolerance=None):
    '''
    ``int x^k rho(x) dx`` by adaptive quadrature over the support.

    :raises QuadratureFailure: if quad reports a failure.
    '''
    tolerance = tolerance or ASYMPTOTIC_DEFAULTS['quad_tolerance']
    lower, upper = density_support(lam)
    result = quad(lambda x: x ** k * limiting_density(x, lam), lower, upper,
                  epsabs=0.0, epsrel=tolerance, limit=200, full_output=1)
    if len(result) == 4:
        raise QuadratureFailure('Quadrature of x^{0} rho for lambda = {1} failed: {2}'.format(
            k, lam, result[3]))
    return result[0]


class DensityResult(object):

    def __init__(self, k, lam, integral, target, tolerance):
        self.k = k
        self.lam = lam
        self.integral = integral
        self.target = target
        self.tolerance = tolerance
        self.error = relative_error(integral, target)

    @property
    def passed(self):
        return self.error <= self.tolerance

    def as_dict(self):
        return {'k': self.k, 'lambda': self.lam, 'integral': self.integral,
                'target': self.target, 'relative_error': self.error,
                'status': 'pass' if self.passed else 'fail'}


def limiting_density_check(k, lam, tolerance=1e-5):
    '''
    Compares the ``k``-th moment of the limiting density with the leading
    scaled Stieltjes-Wigert moment.

    :rtype: :class:`DensityResult`
    '''
    result = DensityResult(k, lam, density_moment(k, lam), sw_leading_target(k, lam), tolerance)
    logger.info('density moment k = %d lambda = %s: %.12g vs %.12g', k, lam,
                result.integral, result.target)
    return result


def density_plot_data(lam, points=200):
    '''
    ``(x, rho(x))`` pairs across the support, endpoints included.
    '''
    lower, upper = density_support(lam)
    return [(float(x), float(limiting_density(x, lam))) for x in np.linspace(lower, upper, points)]


def asymptotic_suite(k_max=None, lambdas=None, n_values=None, workers=None):
    '''
    Probe checks and coefficient limits for both ensembles and density
    checks for Stieltjes-Wigert.

    :returns: Dict with ``probes``, ``coefficients`` and ``density`` result
              lists.
    '''
    settings = _settings({'k_max': k_max, 'lambdas': lambdas, 'n_values': n_values})
    cases = [(ensemble, k, lam) for ensemble in PROBE_ENSEMBLES
             for k in range(1, settings['k_max'] + 1) for lam in settings['lambdas']]
    probes = probe_checks(cases, settings['n_values'], workers)
    coefficients = []
    for ensemble, k, lam in cases:
        coefficients.extend(coefficient_limit_check(ensemble, k, lam, settings['n_values']))
    density = [limiting_density_check(k, lam) for k in range(0, 5) for lam in settings['lambdas']]
    return {'probes': probes, 'coefficients': coefficients, 'density': density}
