'''
Tests Pearson pairs and the second order q-difference eigenvalue.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.ensembles import weights
from qmoments.exact_algebra import Q, XPoly
from qmoments.q_operators.pearson import (derive_pearson_pair, pearson_verify, cn_eigenvalue,
                                          t_polynomial, PearsonResult)
from qmoments.util import QMomentsError
from qmoments.util.test import TestCase


Q_WEIGHTS = (weights.stieltjes_wigert(), weights.discrete_q_hermite(),
             weights.little_q_laguerre(0), weights.little_q_laguerre(1))


class TestPearson(TestCase):

    '''
    Derivation and verification of ``(sigma, tau)``.
    '''

    def test_dqh_pair(self):
        '''
        ``sigma = x^2 - 1`` and ``tau = x / (1 - q)``, so ``T = -1``.
        '''
        weight = weights.discrete_q_hermite()
        sigma, tau = derive_pearson_pair(weight.ratio[0], weight.ratio[1], Q, endpoint=1)
        self.assertEqual(sigma, XPoly([-1, 0, 1]))
        self.assertEqual(tau, XPoly([0, 1 / (1 - Q)]))
        self.assertEqual(t_polynomial(sigma, tau, Q), XPoly([-1]))

    def test_lql_pair(self):
        '''
        ``sigma = x^2 - x`` for the little q-Laguerre weight.
        '''
        self.assertEqual(weights.little_q_laguerre(1).sigma, XPoly([0, -1, 1]))

    def test_lql_pair_alpha_zero(self):
        '''
        At ``alpha = 0`` the ratio alone leaves ``sigma`` undetermined; the
        terminal at 0 gives ``sigma = x^2 - x``, ``tau = -1 + x/(1 - q)``.
        '''
        weight = weights.little_q_laguerre(0)
        self.assertEqual(weight.sigma, XPoly([0, -1, 1]))
        self.assertEqual(weight.tau, XPoly([-1, 1 / (1 - Q)]))
        self.assertEqual(weights.little_q_laguerre(2).tau,
                         XPoly([-(1 + Q + Q * Q), 1 / (1 - Q)]))

    def test_lower_terminal(self):
        '''
        The ratio ``1 / (1 - qx)`` needs the terminal at 0.
        '''
        ratio = (XPoly([1]), XPoly([1, -Q]))
        self.assertRaises(QMomentsError, derive_pearson_pair, ratio[0], ratio[1], Q)
        sigma, tau = derive_pearson_pair(ratio[0], ratio[1], Q, endpoint=1, lower=0)
        self.assertEqual(sigma, XPoly([0, -1, 1]))

    def test_verify(self):
        '''
        The integration by parts identities hold for every q-weight.
        '''
        for weight in Q_WEIGHTS:
            result = pearson_verify(weight, 4)
            self.assertTrue(result.passed, result.as_dict())
            self.assertGreater(result.checked, 0)

    def test_result(self):
        '''
        Failed results are falsy and report their failure.
        '''
        result = PearsonResult('dqh', 3, {'identity': 'ibp', 'a': 0, 'b': 1})
        self.assertFalse(result)
        self.assertEqual(result.as_dict()['status'], 'fail')
        self.assertTrue(PearsonResult('dqh'))


class TestEigenvalue(TestCase):

    '''
    ``C_N`` of the second order operator.
    '''

    def test_constant_polynomial(self):
        '''
        ``p_0 = 1`` is annihilated.
        '''
        for weight in Q_WEIGHTS:
            self.assertEqual(cn_eigenvalue(weight, 0), 0)

    def test_eigenfunctions(self):
        '''
        The monic orthogonal polynomials are eigenfunctions.
        '''
        for weight in Q_WEIGHTS:
            for n in range(1, 4):
                self.assertNotEqual(cn_eigenvalue(weight, n), 0)
