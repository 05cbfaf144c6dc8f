'''
Tests q-Laplace transforms and the fourth order q-difference equation.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.ensembles import weights
from qmoments.exact_algebra import Q, XPoly
from qmoments.q_operators.laplace import (series_from_measure, dqh_phi0_closed_form,
                                          measure_series, MEASURE_KINDS, lift_product_rule_holds,
                                          leibniz_holds, verify_annihilation, annihilation_checks,
                                          build_fourth_order, display_annihilates,
                                          AnnihilationResult)
from qmoments.q_operators.series import FormalSeries
from qmoments.util import ConfigError
from qmoments.util.test import TestCase


class TestTransforms(TestCase):

    '''
    Series of ``int e_q(lambda x) f(x) dmu``.
    '''

    def test_dqh_closed_form(self):
        '''
        The transform of the discrete q-Hermite weight is a q-exponential in
        ``lambda^2``.
        '''
        series = series_from_measure(weights.discrete_q_hermite(), order=8)
        self.assertEqual(series, dqh_phi0_closed_form(Q, 8))
        self.assertRatEqual(series[0], 1 - Q)
        self.assertRatEqual(series[1], 0)

    def test_measure_kinds(self):
        '''
        Every kind is produced; ``phi`` starts at one for the normalised
        square.
        '''
        series = measure_series(weights.discrete_q_hermite(), 0, 6)
        self.assertEqual(sorted(series), sorted(MEASURE_KINDS))
        self.assertRatEqual(series['phi'][0], 1)
        self.assertTrue(series['psi1'].is_zero())

    def test_classical_weight(self):
        '''
        Classical weights have no q-Laplace transform.
        '''
        self.assertRaises(ConfigError, series_from_measure, weights.gaussian())


class TestProductRules(TestCase):

    '''
    Commutation of lifted polynomials with ``lambda``.
    '''

    def setUp(self):
        self.series = FormalSeries([1, 2, 3, 4, 5, 6, 7, 8], 8)

    def test_leibniz(self):
        '''
        ``D_q^n (lambda f)``.
        '''
        for n in range(1, 4):
            self.assertTrue(leibniz_holds(self.series, n, Q))

    def test_lift(self):
        '''
        ``R(D_q)(lambda^m f)`` for ``R = (1 + x)^2``.
        '''
        for m in range(3):
            self.assertTrue(lift_product_rule_holds(XPoly([1, 2, 1]), m, self.series, Q))


class TestAnnihilation(TestCase):

    '''
    The fourth order equation on the transform of ``p_N^2``.
    '''

    def test_dqh(self):
        '''
        Discrete q-Hermite, ``N = 0, 1``.
        '''
        weight = weights.discrete_q_hermite()
        for n in range(2):
            result = verify_annihilation(weight, n, 12)
            self.assertTrue(result.passed, result.as_dict())
            self.assertEqual(result.as_dict()['status'], 'pass')

    def test_operators(self):
        '''
        Five operators ``M_0 .. M_4``.
        '''
        operators = build_fourth_order(weights.little_q_laguerre(1), 1)
        self.assertEqual(len(operators), 5)

    def test_minimum_order(self):
        '''
        Orders below ten are rejected.
        '''
        self.assertRaises(ConfigError, verify_annihilation, weights.discrete_q_hermite(), 0, 8)

    def test_checks(self):
        '''
        Batch checks keep case order.
        '''
        results = annihilation_checks([('dqh', None, 0), ('lql', 0, 0)], order=10)
        self.assertEqual([result.weight for result in results],
                         [weights.DISCRETE_Q_HERMITE, weights.LITTLE_Q_LAGUERRE])
        self.assertTrue(all(results))

    def test_display(self):
        '''
        The explicit ``N = 0`` discrete q-Hermite equation annihilates the
        transform once the resolvent sign is corrected.
        '''
        self.assertTrue(display_annihilates(Q, 12, corrected=True))

    def test_failure_dict(self):
        '''
        Failures report the first surviving coefficient.
        '''
        result = AnnihilationResult('dqh', 1, 12, 8, (3, 1 - Q))
        self.assertFalse(result)
        self.assertEqual(result.as_dict()['failure'], {'index': 3, 'value': str(1 - Q)})
