'''
Tests the fourth order differential equations of the classical weights and
the audit of their displayed forms.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.audit import EXACT, MONOMIAL
from qmoments.ensembles import weights
from qmoments.q_operators.classical import (classical_eigenvalue, classical_ode_check,
                                            classical_operators, display_audit, display_matches,
                                            moment_series)
from qmoments.util import ConfigError
from qmoments.util.test import TestCase


class TestClassicalEquations(TestCase):

    '''
    Hermite, Laguerre and Jacobi.
    '''

    def test_eigenvalues(self):
        '''
        ``2N`` for Hermite and ``N`` for Laguerre.
        '''
        self.assertEqual(classical_eigenvalue(weights.gaussian(), 2), 4)
        self.assertEqual(classical_eigenvalue(weights.laguerre(1), 3), 3)
        self.assertEqual(classical_eigenvalue(weights.jacobi(1, 1), 1), 4)

    def test_moment_series(self):
        '''
        The constant term is ``h_N``.
        '''
        self.assertEqual(moment_series(weights.gaussian(), 0, 4)[0], 1)
        self.assertEqual(moment_series(weights.gaussian(), 1, 4)[0], Fraction(1, 2))

    def test_annihilation(self):
        '''
        The assembled operator annihilates the transform of ``P_N^2``.
        '''
        for weight in (weights.gaussian(), weights.laguerre(0), weights.laguerre(1),
                       weights.jacobi(1, 1)):
            for n in range(3):
                result = classical_ode_check(weight, n, 12)
                self.assertTrue(result.passed, result.as_dict())

    def test_q_weight(self):
        '''
        q-weights are rejected.
        '''
        self.assertRaises(ConfigError, classical_operators, weights.discrete_q_hermite(), 1)


class TestDisplays(TestCase):

    '''
    Displayed equations against the assembled operators.
    '''

    def test_laguerre(self):
        '''
        ``s`` times the Laguerre display is the assembled operator.
        '''
        for n in range(3):
            self.assertTrue(display_matches(weights.laguerre(1), n))
            self.assertEqual(display_audit(weights.laguerre(1), n).status, EXACT)

    def test_hermite(self):
        '''
        The Hermite display carries an overall sign.
        '''
        entry = display_audit(weights.gaussian(), 1)
        self.assertEqual(entry.status, MONOMIAL)
        self.assertEqual(entry.factor, -1)
        self.assertEqual(entry.exponent, 0)
        self.assertFalse(display_matches(weights.gaussian(), 1))

    def test_jacobi(self):
        '''
        The Jacobi display needs ``(a+b)(a+b+2)`` in the ``Phi'`` coefficient.
        '''
        weight = weights.jacobi(1, 1)
        self.assertFalse(display_matches(weight, 1, printed=True))
        self.assertTrue(display_matches(weight, 1, printed=False))
