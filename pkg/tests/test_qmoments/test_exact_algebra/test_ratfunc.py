'''
Tests the canonical rational functions and Laurent polynomials.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
import mpmath
from qmoments.exact_algebra import PolyQ, RatFuncQ, Q, S
from qmoments.util import PoleError
from qmoments.util.test import TestCase


class TestPolyQ(TestCase):

    '''
    Laurent polynomial arithmetic and evaluation.
    '''

    def test_multiply(self):
        '''
        ``(1 + 2q)(1 - 2q) = 1 - 4q^2``.
        '''
        self.assertEqual(PolyQ([1, 2]) * PolyQ([1, -2]), PolyQ([1, 0, -4]))

    def test_negative_shift(self):
        '''
        A pure negative power keeps its degree and valuation.
        '''
        poly = PolyQ.monomial(3, -2)
        self.assertEqual(poly.degree(), -2)
        self.assertEqual(poly.valuation(), -2)
        self.assertEqual(poly.coefficient(-2), 3)

    def test_positive_shift_is_expanded(self):
        '''
        Ordinary polynomials always carry a zero shift.
        '''
        poly = PolyQ([1], 2)
        self.assertEqual(poly.shift, 0)
        self.assertEqual(poly, PolyQ([0, 0, 1]))

    def test_eval_rational(self):
        '''
        Exact evaluation at a rational point.
        '''
        self.assertEqual(PolyQ([1, 1]).eval(Fraction(1, 2)), Fraction(3, 2))
        self.assertEqual(PolyQ([1], -1).eval(Fraction(1, 4)), 4)

    def test_eval_mpmath(self):
        '''
        Evaluation at an extended precision float.
        '''
        self.assertRelativeClose(PolyQ([1, 1, 1]).eval(mpmath.mpf('0.5')), 1.75)

    def test_eval_negative_power_at_zero(self):
        '''
        Negative powers cannot be evaluated at zero.
        '''
        self.assertRaises(ZeroDivisionError, PolyQ([1], -1).eval, 0)

    def test_str(self):
        '''
        Printed form.
        '''
        self.assertEqual(str(PolyQ([1, -2, 0, 1])), '1 - 2*q + q^3')
        self.assertEqual(str(PolyQ()), '0')

    def test_variable_mismatch(self):
        '''
        Polynomials in ``q`` and ``s`` do not mix.
        '''
        self.assertRaises(ValueError, PolyQ([1, 1]).__add__, PolyQ([1, 1], var='s'))

    def test_unknown_variable(self):
        '''
        Only ``q`` and ``s`` are variables.
        '''
        self.assertRaises(ValueError, PolyQ, [1], 0, 'x')


class TestRatFuncQ(TestCase):

    '''
    Canonical form, arithmetic and substitutions.
    '''

    def test_cancellation(self):
        '''
        Common factors cancel so that equal functions compare equal.
        '''
        self.assertRatEqual((1 - Q ** 2) / (1 - Q), 1 + Q)

    def test_constant_comparison(self):
        '''
        Constants compare equal to scalars.
        '''
        self.assertRatEqual(Q / Q, 1)
        self.assertRatEqual((2 * Q) / (4 * Q), Fraction(1, 2))
        self.assertTrue((Q - Q).is_zero())

    def test_str(self):
        '''
        Printed form keeps a positive constant term in the denominator.
        '''
        self.assertEqual(str((1 - Q) / (1 + Q ** 2)), '(1 - q) / (1 + q^2)')
        self.assertEqual(str(1 / (1 - Q)), '1 / (1 - q)')
        self.assertEqual(str(Q ** -1), 'q^-1')

    def test_parse(self):
        '''
        Printed forms parse back into the same function.
        '''
        value = (1 - Q) / (1 + Q ** 2)
        self.assertRatEqual(RatFuncQ.parse('(1 - q)/(1 + q^2)'), value)
        self.assertRatEqual(RatFuncQ.parse(str(value)), value)

    def test_eval(self):
        '''
        Evaluation at a rational point.
        '''
        self.assertEqual(((1 + Q) / (1 - Q)).eval(Fraction(1, 2)), 3)

    def test_pole(self):
        '''
        Poles raise :class:`PoleError`.
        '''
        self.assertRaises(PoleError, (1 / (1 - Q)).eval_at_one)
        self.assertRaises(PoleError, RatFuncQ, 1, 0)
        self.assertRaises(PoleError, (Q - Q).inverse)

    def test_eval_at_one(self):
        '''
        Removable singularities at ``q = 1`` are cancelled first.
        '''
        self.assertEqual(((1 - Q ** 3) / (1 - Q)).eval_at_one(), 3)

    def test_subs_inverse(self):
        '''
        ``q -> 1/q``.
        '''
        self.assertRatEqual(Q.subs_inverse(), Q.inverse())
        self.assertRatEqual(((1 - Q) / (1 + Q)).subs_inverse(), (Q - 1) / (Q + 1))

    def test_as_monomial(self):
        '''
        Monomials are recognised; sums are not.
        '''
        self.assertEqual((3 * Q ** 2).as_monomial(), (3, 2))
        self.assertEqual((Q ** -3).as_monomial(), (1, -3))
        self.assertIsNone((1 + Q).as_monomial())

    def test_to_s(self):
        '''
        ``q = s^2``.
        '''
        self.assertRatEqual(Q.to_s(), S ** 2)
        self.assertRatEqual((1 / (1 - Q)).to_s(), 1 / (1 - S ** 2))

    def test_variable_mismatch(self):
        '''
        Functions of ``q`` and ``s`` do not mix.
        '''
        self.assertRaises(ValueError, Q.__add__, S)

    def test_power(self):
        '''
        Integer powers, including negative ones.
        '''
        value = (1 - Q) / Q
        self.assertRatEqual(value ** 2, (1 - Q) ** 2 / Q ** 2)
        self.assertRatEqual(value ** -1, Q / (1 - Q))
        self.assertRatEqual(value ** 0, 1)
