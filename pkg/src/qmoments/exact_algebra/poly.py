'''
Dense Laurent polynomials in a single variable with rational coefficients.

Coefficients are stored lowest degree first, together with a base exponent
``shift`` that is zero for ordinary polynomials and negative when the
polynomial carries negative powers.  Products are delegated to the dense
univariate arithmetic of :mod:`sympy.polys` over the integers.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from math import lcm
from sympy import ZZ
from sympy.polys.densearith import dup_mul


VARIABLES = ('q', 's')


def integerize(coeffs):
    '''
    Clears denominators from a sequence of Fractions.

    :returns: Tuple ``(multiplier, integers)`` with
              ``integers[i] == multiplier * coeffs[i]``.
    '''
    multiplier = 1
    for coeff in coeffs:
        multiplier = lcm(multiplier, coeff.denominator)
    return multiplier, [coeff.numerator * (multiplier // coeff.denominator)
                        for coeff in coeffs]


def to_dup(integers):
    '''
    Converts lowest-first integers into sympy's highest-first dense list.
    '''
    return [ZZ(value) for value in reversed(integers)]


def from_dup(dup):
    '''
    Converts sympy's highest-first dense list into lowest-first integers.
    '''
    return [int(value) for value in reversed(dup)]


def dense_mul(left, right):
    '''
    Multiplies two lowest-first Fraction coefficient lists.
    '''
    if not left or not right:
        return []
    left_mult, left_ints = integerize(left)
    right_mult, right_ints = integerize(right)
    product = from_dup(dup_mul(to_dup(left_ints), to_dup(right_ints), ZZ))
    scale = left_mult * right_mult
    return [Fraction(value, scale) for value in product]


def strip_low(coeffs):
    '''
    Removes leading (low order) zeros.

    :returns: Tuple ``(count_removed, remaining)``.
    '''
    index = 0
    while index < len(coeffs) and coeffs[index] == 0:
        index += 1
    return index, list(coeffs[index:])


class PolyQ(object):

    '''
    Immutable dense Laurent polynomial ``q^shift * sum(c_i q^i)``.

    :param coeffs: Coefficients, lowest degree first.
    :param shift: Base exponent; positive values are expanded into leading
                  zeros so that ordinary polynomials always have shift 0.
    :param var: Variable tag, ``'q'`` or ``'s'``.
    '''

    __slots__ = ('coeffs', 'shift', 'var')

    def __init__(self, coeffs=(), shift=0, var='q'):
        if var not in VARIABLES:
            raise ValueError('Unknown variable tag \'{0}\''.format(var))
        values = [Fraction(coeff) for coeff in coeffs]
        while values and values[-1] == 0:
            values.pop()
        if shift > 0:
            values = [Fraction(0)] * shift + values
            shift = 0
        index = 0
        while shift < 0 and index < len(values) and values[index] == 0:
            index += 1
            shift += 1
        values = values[index:]
        if not values:
            shift = 0
        self.coeffs = tuple(values)
        self.shift = shift
        self.var = var

    @classmethod
    def from_laurent(cls, valuation, coeffs, var='q'):
        '''
        Builds ``q^valuation * sum(coeffs[i] q^i)``.
        '''
        return cls(coeffs, valuation, var)

    @classmethod
    def monomial(cls, coeff, exponent, var='q'):
        '''
        Builds ``coeff * q^exponent``.
        '''
        return cls([coeff], exponent, var)

    @classmethod
    def constant(cls, value, var='q'):
        return cls([value], 0, var)

    def laurent(self):
        '''
        :returns: Tuple ``(valuation, coefficients)`` where the first
                  coefficient is non-zero (or ``(0, [])`` for zero).
        '''
        skipped, remaining = strip_low(self.coeffs)
        if not remaining:
            return 0, []
        return self.shift + skipped, remaining

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        '''
        Highest exponent present, or ``None`` for the zero polynomial.
        '''
        if not self.coeffs:
            return None
        return self.shift + len(self.coeffs) - 1

    def valuation(self):
        '''
        Lowest exponent present, or ``None`` for the zero polynomial.
        '''
        if not self.coeffs:
            return None
        return self.laurent()[0]

    def coefficient(self, exponent):
        index = exponent - self.shift
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return Fraction(0)

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def terms(self):
        '''
        Yields ``(exponent, coefficient)`` pairs for non-zero coefficients.
        '''
        for index, coeff in enumerate(self.coeffs):
            if coeff != 0:
                yield self.shift + index, coeff

    def _check(self, other):
        if other.var != self.var:
            raise ValueError('Cannot combine polynomials in {0} and {1}'.format(
                self.var, other.var))

    def _coerce(self, other):
        if isinstance(other, PolyQ):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.constant(other, self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        low = min(self.shift, other.shift)
        high = max(self.shift + len(self.coeffs), other.shift + len(other.coeffs))
        values = [Fraction(0)] * (high - low)
        for poly in (self, other):
            offset = poly.shift - low
            for index, coeff in enumerate(poly.coeffs):
                values[offset + index] += coeff
        return PolyQ(values, low, self.var)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-coeff for coeff in self.coeffs], self.shift, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ([coeff * other for coeff in self.coeffs], self.shift, self.var)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PolyQ(dense_mul(list(self.coeffs), list(other.coeffs)),
                     self.shift + other.shift, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError('Negative powers of a polynomial are not polynomials')
        result = PolyQ.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyQ.constant(other, self.var)
        if not isinstance(other, PolyQ):
            return NotImplemented
        return (self.var == other.var and self.shift == other.shift and
                self.coeffs == other.coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.coeffs, self.shift, self.var))

    def substitute_power(self, power):
        '''
        Substitutes ``q -> q^power`` for a non-zero integer power.
        '''
        if power == 0:
            raise ValueError('Substitution q -> q^0 is not supported')
        terms = list(self.terms())
        if not terms:
            return self
        exponents = [exponent * power for exponent, _ in terms]
        low = min(exponents)
        values = [Fraction(0)] * (max(exponents) - low + 1)
        for exponent, (_, coeff) in zip(exponents, terms):
            values[exponent - low] = coeff
        return PolyQ(values, low, self.var)

    def relabel(self, var):
        return PolyQ(self.coeffs, self.shift, var)

    def eval(self, value):
        '''
        Evaluates at a point.  Rational points use integer Horner evaluation;
        any other ring element (e.g. an mpmath float) uses plain Horner.

        :raises ZeroDivisionError: for negative powers at zero.
        '''
        if not self.coeffs:
            return 0
        valuation, values = self.laurent()
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if valuation < 0 and value == 0:
                raise ZeroDivisionError('negative power evaluated at zero')
            multiplier, integers = integerize(values)
            numer, denom = value.numerator, value.denominator
            total = integers[-1]
            power = denom
            for coeff in reversed(integers[:-1]):
                total = total * numer + coeff * power
                power *= denom
            degree = len(integers) - 1
            result = Fraction(total, multiplier * denom ** degree)
            return result * value ** valuation
        total = 0
        for coeff in reversed(values):
            total = total * value + _as_scalar(coeff, value)
        return total * value ** valuation

    def __str__(self):
        return format_terms(list(self.terms()), self.var)

    def __repr__(self):
        return 'PolyQ({0!r}, shift={1}, var={2!r})'.format(
            [str(coeff) for coeff in self.coeffs], self.shift, self.var)


def _as_scalar(coeff, like):
    '''
    Converts a Fraction coefficient into the scalar type of ``like``.
    '''
    if coeff.denominator == 1:
        return coeff.numerator
    return type(like)(coeff.numerator) / coeff.denominator


def format_terms(terms, var):
    '''
    Renders ``(exponent, coefficient)`` pairs as ``1 - 2*q + q^3``.
    '''
    if not terms:
        return '0'
    pieces = []
    for exponent, coeff in terms:
        sign = '-' if coeff < 0 else '+'
        magnitude = abs(coeff)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = var if exponent == 1 else '{0}^{1}'.format(var, exponent)
            body = power if magnitude == 1 else '{0}*{1}'.format(magnitude, power)
        pieces.append((sign, body))
    text = ('-' if pieces[0][0] == '-' else '') + pieces[0][1]
    for sign, body in pieces[1:]:
        text += ' {0} {1}'.format(sign, body)
    return text
