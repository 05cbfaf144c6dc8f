'''
Tests truncated formal power series and q-difference operators.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import random
from fractions import Fraction
from qmoments.exact_algebra import Q
from qmoments.q_operators.series import (FormalSeries, QOperator, d_q, identity, mul_lambda,
                                         polynomial_in_d, resolvent, scalar, shift)
from qmoments.util.test import TestCase


class TestFormalSeries(TestCase):

    '''
    Series arithmetic.
    '''

    def test_padding(self):
        '''
        Coefficients are padded or cut to the order.
        '''
        self.assertEqual(FormalSeries([1], 3).coeffs, [1, 0, 0])
        self.assertEqual(FormalSeries([1, 2, 3, 4], 2).coeffs, [1, 2])
        self.assertEqual(len(FormalSeries.zero(4)), 4)

    def test_multiply(self):
        '''
        ``(1 + t)^2``.
        '''
        one_plus = FormalSeries([1, 1], 4)
        self.assertEqual(one_plus * one_plus, FormalSeries([1, 2, 1], 4))

    def test_inverse(self):
        '''
        ``1 / (1 - t)`` is the geometric series.
        '''
        self.assertEqual(FormalSeries([1, -1], 5).inverse(), FormalSeries([1] * 5))
        self.assertRaises(ZeroDivisionError, FormalSeries([0, 1], 3).inverse)

    def test_inverse_rational_function(self):
        '''
        ``1 / (1 - q t)``.
        '''
        inverse = FormalSeries([1, -Q], 4).inverse()
        self.assertRatListEqual(inverse.coeffs, [1, Q, Q ** 2, Q ** 3])

    def test_shift_and_scale(self):
        '''
        ``t f(t)`` and ``f(2t)``.
        '''
        series = FormalSeries([1, 1, 1], 3)
        self.assertEqual(series.shift(1), FormalSeries([0, 1, 1], 3))
        self.assertEqual(series.scale_argument(2), FormalSeries([1, 2, 4], 3))

    def test_orders_combine(self):
        '''
        Sums and products keep the smaller order.
        '''
        total = FormalSeries([1, 1, 1], 3) + FormalSeries([1, 1], 2)
        self.assertEqual(total.order, 2)
        self.assertEqual(total.coeffs, [2, 2])

    def test_first_nonzero(self):
        '''
        First non-zero coefficient, or ``None``.
        '''
        self.assertEqual(FormalSeries([0, 0, 3], 3).first_nonzero(), (2, 3))
        self.assertIsNone(FormalSeries.zero(3).first_nonzero())
        self.assertTrue(FormalSeries.zero(3).is_zero())


class TestQOperator(TestCase):

    '''
    Operators acting on series in ``lambda``.
    '''

    def setUp(self):
        self.series = FormalSeries([1, 1, 1, 1], 4)

    def test_d_q(self):
        '''
        ``a_k -> [k+1]_q a_(k+1)`` loses the top coefficient.
        '''
        image = d_q(Q)(self.series)
        self.assertEqual(image.order, 3)
        self.assertRatListEqual(image.coeffs, [1, 1 + Q, 1 + Q + Q ** 2])

    def test_shift(self):
        '''
        ``a_k -> q^k a_k`` and its inverse.
        '''
        self.assertRatListEqual(shift(Q)(self.series).coeffs, [1, Q, Q ** 2, Q ** 3])
        self.assertEqual((shift(Q, -1) * shift(Q))(self.series), self.series)

    def test_resolvent(self):
        '''
        The resolvent inverts ``1 + q^index Lambda``.
        '''
        operator = identity() + Q * shift(Q)
        self.assertEqual((resolvent(Q, 1) * operator)(self.series), self.series)

    def test_composition(self):
        '''
        ``D_q (lambda f)`` for ``f`` the geometric series.
        '''
        composed = d_q(Q) * mul_lambda()
        self.assertIsInstance(composed, QOperator)
        self.assertEqual(composed.loss, 1)
        self.assertRatListEqual(composed(self.series).coeffs, [1, 1 + Q, 1 + Q + Q ** 2])

    def test_mul_lambda(self):
        '''
        ``lambda^2 f``.
        '''
        self.assertEqual(mul_lambda(2)(self.series), FormalSeries([0, 0, 1, 1], 4))

    def test_linear_combination(self):
        '''
        ``2 - D`` at ``q = 1`` on ``1 + t + t^2``.
        '''
        operator = scalar(Fraction(2)) - d_q(1)
        self.assertEqual(operator(FormalSeries([1, 1, 1], 3)), FormalSeries([1, 0], 2))

    def test_polynomial_in_d(self):
        '''
        ``1 + D^2`` at ``q = 1`` on ``1 + t + t^2 + t^3``.
        '''
        operator = polynomial_in_d([1, 0, 1], 1)
        self.assertEqual(operator.loss, 2)
        self.assertEqual(operator(self.series), FormalSeries([3, 7], 2))

    def test_resolvent_indices(self):
        '''
        ``R_i (1 + q^i Lambda) = 1`` for ``i = 0, 1, 2`` at order 30.
        '''
        series = FormalSeries([Fraction(k + 1) for k in range(30)], 30)
        for index in range(3):
            operator = identity() + scalar(Q ** index) * shift(Q)
            self.assertEqual((resolvent(Q, index) * operator)(series), series)
            self.assertEqual((operator * resolvent(Q, index))(series), series)

    def test_truncation_commutes(self):
        '''
        Applying a word of generators then truncating equals truncating
        first, up to the order lost by the word.
        '''
        q = Fraction(1, 3)
        generators = [d_q(q), shift(q), shift(q, -1), mul_lambda(), resolvent(q, 0),
                      resolvent(q, 1), resolvent(q, 2), scalar(Fraction(-2, 5))]
        rng = random.Random(7)
        long_series = FormalSeries([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                                    for _ in range(40)], 40)
        short_series = long_series.truncate(20)
        for _ in range(40):
            word = identity()
            for _ in range(rng.randint(1, 6)):
                word = rng.choice(generators) * word
            expected = word(short_series)
            actual = word(long_series).truncate(20)
            self.assertEqual(expected.order, 20 - word.loss)
            self.assertEqual(actual.coeffs[:expected.order], expected.coeffs, word.label)
