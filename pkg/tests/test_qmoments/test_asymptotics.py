'''
Tests the large ``N`` probes, extrapolation and the limiting density.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import math
from qmoments.asymptotics import (ScalingProbe, extrapolate_leading, odd_term_ratio,
                                  convergence_ratios, sw_leading_target, dqh_leading_target,
                                  leading_target, probe_check, limiting_density, density_support,
                                  limiting_density_check, density_plot_data, scaled_moment,
                                  dqh_leading_printed, display_convention_errors,
                                  matching_convention, x_convention_check)
from qmoments.util import ConfigError
from qmoments.util.test import TestCase


def synthetic_probe(n_values=(4, 8, 16, 32)):
    return ScalingProbe('sw', 1, 1.0, n_values, [2.0 + 3.0 / n ** 2 for n in n_values])


class TestExtrapolation(TestCase):

    '''
    Fits in ``1/N^2``.
    '''

    def test_leading(self):
        '''
        ``2 + 3/N^2`` extrapolates to 2.
        '''
        fit = extrapolate_leading(synthetic_probe())
        self.assertRelativeClose(fit.leading, 2.0, 1e-9)
        self.assertRelativeClose(fit.coefficients[1], 3.0, 1e-6)
        self.assertLess(fit.change, 1e-9)

    def test_odd_term(self):
        '''
        No ``1/N`` term.
        '''
        self.assertLess(odd_term_ratio(synthetic_probe()), 1e-8)

    def test_convergence(self):
        '''
        Doubling ``N`` divides the steps by four.
        '''
        for ratio in convergence_ratios(synthetic_probe()):
            self.assertRelativeClose(ratio, 4.0, 1e-9)

    def test_too_few(self):
        '''
        At least three values are needed.
        '''
        self.assertRaises(ConfigError, extrapolate_leading, synthetic_probe((4, 8)))
        self.assertRaises(ConfigError, odd_term_ratio, synthetic_probe((4, 8, 16)))

    def test_increasing(self):
        '''
        ``N`` values must increase.
        '''
        self.assertRaises(ConfigError, ScalingProbe, 'sw', 1, 1.0, [8, 4, 16], [1.0, 1.0, 1.0])


class TestLeadingTerms(TestCase):

    '''
    Closed leading terms and the probes that approach them.
    '''

    def test_sw(self):
        '''
        ``(e^lambda - 1)/lambda`` at ``k = 1``.
        '''
        self.assertEqual(sw_leading_target(0, 1.0), 1.0)
        for lam in (0.5, 1.0, 2.0):
            self.assertRelativeClose(sw_leading_target(1, lam), math.expm1(lam) / lam)

    def test_dqh(self):
        '''
        ``(1 - e^-lambda)^2 / lambda`` at ``k = 1``.
        '''
        for lam in (0.5, 1.0, 2.0):
            self.assertRelativeClose(dqh_leading_target(1, lam),
                                     (1 - math.exp(-lam)) ** 2 / lam)

    def test_unknown(self):
        '''
        Only the Stieltjes-Wigert and discrete q-Hermite probes exist.
        '''
        self.assertRaises(ConfigError, leading_target, 'gaussian', 1, 1.0)
        self.assertRaises(ConfigError, scaled_moment, 'lql', 1, 1.0, 10)

    def test_probes(self):
        '''
        The first moments extrapolate to their leading terms.
        '''
        for ensemble in ('sw', 'dqh'):
            result = probe_check(ensemble, 1, 1.0)
            self.assertTrue(result.passed, result.as_dict())


class TestLimitingDensity(TestCase):

    '''
    The limiting Stieltjes-Wigert density.
    '''

    def test_support(self):
        '''
        The endpoints multiply to one; ``lambda`` must be positive.
        '''
        lower, upper = density_support(1.0)
        self.assertRelativeClose(lower * upper, 1.0)
        self.assertLess(lower, upper)
        self.assertRaises(ConfigError, density_support, 0.0)

    def test_outside(self):
        '''
        Zero off the support.
        '''
        lower, upper = density_support(1.0)
        self.assertEqual(limiting_density(lower / 2, 1.0), 0.0)
        self.assertEqual(limiting_density(upper * 2, 1.0), 0.0)
        self.assertEqual(limiting_density(-1.0, 1.0), 0.0)
        self.assertGreater(limiting_density(1.0, 1.0), 0.0)

    def test_moments(self):
        '''
        Normalisation and first moment.
        '''
        for k in (0, 1):
            result = limiting_density_check(k, 1.0)
            self.assertTrue(result.passed, result.as_dict())

    def test_plot_data(self):
        '''
        Points span the support.
        '''
        points = density_plot_data(1.0, 11)
        self.assertEqual(len(points), 11)
        self.assertRelativeClose(points[0][0], density_support(1.0)[0])


class TestDisplayConventions(TestCase):

    '''
    The displayed discrete q-Hermite leading term.
    '''

    def test_errors(self):
        '''
        Errors against the display itself vanish for its own convention.
        '''
        leading = dqh_leading_printed(1, 1.0, math.exp(1.0))
        errors = display_convention_errors(1, 1.0, leading)
        self.assertLess(errors['e^lambda'], 1e-12)
        self.assertGreater(errors['e^-lambda'], 1e-2)
        self.assertEqual(matching_convention(errors, 1e-6), 'e^lambda')
        self.assertIsNone(matching_convention({'e^lambda': 1.0, 'e^-lambda': 2.0}, 1e-6))

    def test_against_extrapolation(self):
        '''
        The probes agree with the derived leading term and with neither
        displayed convention.
        '''
        errors = x_convention_check(1, 1.0, (100, 200, 400))
        self.assertLess(errors['derived'], 1e-5)
        self.assertGreater(errors['e^lambda'], 1e-2)
        self.assertGreater(errors['e^-lambda'], 1e-2)
