'''
Tests the discrete q-Hermite measure ``p_N^2 dmu / h_N``.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.exact_algebra import Q, XPoly
from qmoments.hermite_measure import (RecurrenceData, linearisation_monic, linearisation_oracle,
                                      linearisation_holds, shifted_moment_M, shifted_moment_oracle,
                                      squared_moment, squared_moment_difference,
                                      monomial_expansion_holds, dilation_holds,
                                      path_generating_function, path_closed_form)
from qmoments.util import ConfigError
from qmoments.util.test import TestCase


class TestRecurrenceData(TestCase):

    '''
    ``d_n^2`` and monic norms.
    '''

    def test_values(self):
        '''
        ``d_1^2 = 1 - q`` and ``h_2 = q (1 - q)(1 - q^2)``.
        '''
        data = RecurrenceData()
        self.assertRatEqual(data.d_sq(1), 1 - Q)
        self.assertRatEqual(data.h(2), Q * (1 - Q) * (1 - Q ** 2))
        self.assertRatEqual(data.d_sq_product(2, 2), data.h(2))

    def test_index(self):
        '''
        ``d_0`` is undefined.
        '''
        self.assertRaises(ConfigError, RecurrenceData().d_sq, 0)


class TestLinearisation(TestCase):

    '''
    ``p_n(q^k x)`` in the monic basis.
    '''

    def test_second_degree(self):
        '''
        ``p_2(qx) = q^2 p_2(x) - (1 - q)(1 - q^2)``.
        '''
        expected = [Q ** 2, -(1 - Q) * (1 - Q ** 2)]
        self.assertRatListEqual(linearisation_monic(2, 1), expected)
        self.assertRatListEqual(linearisation_oracle(2, 1), [expected[0], 0, expected[1]])
        self.assertTrue(linearisation_holds(2, 1))

    def test_no_dilation(self):
        '''
        ``k = 0`` leaves the polynomial alone.
        '''
        self.assertRatListEqual(linearisation_monic(3, 0), [1])

    def test_negative(self):
        '''
        Negative indices are rejected.
        '''
        self.assertRaises(ConfigError, linearisation_monic, -1, 0)


class TestMoments(TestCase):

    '''
    Moments of the measure.
    '''

    def test_shifted(self):
        '''
        ``M_(1,0) = q`` and ``M_(1,1) = q^3`` by both routes.
        '''
        self.assertRatEqual(shifted_moment_M(1, 0), Q)
        self.assertRatEqual(shifted_moment_M(1, 1), Q ** 3)
        self.assertRatEqual(shifted_moment_oracle(1, 0), Q)
        self.assertRatEqual(shifted_moment_oracle(1, 1), Q ** 3)
        self.assertRatEqual(shifted_moment_M(0, 2), 1)

    def test_squared(self):
        '''
        ``m_(2,0) = 1 - q`` and ``m_(2,1) = 1 - q^3``, the increment of the
        density moment.
        '''
        self.assertRatEqual(squared_moment(1, 0), 1 - Q)
        self.assertRatEqual(squared_moment(1, 1), 1 - Q ** 3)
        self.assertRatEqual(squared_moment_difference(1, 1), 1 - Q ** 3)
        self.assertRatEqual(squared_moment(0, 3), 1)

    def test_monomial_expansion(self):
        '''
        ``x^(2p)`` in the products ``prod (1 - q^(-2j) x^2)``.
        '''
        for p in range(4):
            self.assertTrue(monomial_expansion_holds(p))

    def test_dilation(self):
        '''
        ``q int f(qx) dmu = int (1 - x^2) f(x) dmu`` for ``1`` and ``x^2``.
        '''
        self.assertTrue(dilation_holds(XPoly([1])))
        self.assertTrue(dilation_holds(XPoly([0, 0, 1])))


class TestPaths(TestCase):

    '''
    Weighted lattice path counts.
    '''

    def test_small(self):
        '''
        ``f_1^2 = 1 + q^2``.
        '''
        self.assertRatEqual(path_generating_function(1, 2), 1 + Q ** 2)
        self.assertRatEqual(path_closed_form(1, 2), 1 + Q ** 2)

    def test_closed_form(self):
        '''
        The recursion gives ``[l - 1 + k choose k]_(q^2)``.
        '''
        for k in range(4):
            for l in range(4):
                self.assertRatEqual(path_generating_function(k, l), path_closed_form(k, l))
