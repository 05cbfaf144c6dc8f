'''
Polynomials in the eigenvalue variable ``x`` whose coefficients live in a
field (Fractions or :class:`RatFuncQ`), with the dilation and q-derivative
operations needed by Pearson pairs and orthogonal polynomials.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction


def q_bracket(n, q):
    '''
    ``[n]_q = 1 + q + ... + q^(n-1)`` computed without division.
    '''
    total = 0
    power = 1
    for _ in range(n):
        total = total + power
        power = power * q
    return total


class XPoly(object):

    '''
    Immutable polynomial ``sum(c_i x^i)``; coefficients lowest degree first.
    '''

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        values = [Fraction(value) if isinstance(value, int) else value for value in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, value):
        return cls([value])

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, index):
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return Fraction(0)

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return XPoly([self.coefficient(i) + other.coefficient(i) for i in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return XPoly([-value for value in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return XPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return XPoly([value * other for value in self.coeffs])
        if self.is_zero() or other.is_zero():
            return XPoly()
        values = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, left in enumerate(self.coeffs):
            if left == 0:
                continue
            for j, right in enumerate(other.coeffs):
                values[i + j] = values[i + j] + left * right
        return XPoly(values)

    def __rmul__(self, other):
        return XPoly([other * value for value in self.coeffs])

    def __pow__(self, exponent):
        result = XPoly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            other = XPoly([other])
        size = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(i) == other.coefficient(i) for i in range(size))

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def eval(self, point):
        total = 0
        for value in reversed(self.coeffs):
            total = total * point + value
        return total

    def dilate(self, factor):
        '''
        ``p(x) -> p(factor * x)``.
        '''
        result = []
        power = 1
        for value in self.coeffs:
            result.append(value * power)
            power = power * factor
        return XPoly(result)

    def q_derivative(self, q):
        '''
        ``D_q p(x) = (p(qx) - p(x)) / ((q - 1) x)``, i.e. ``x^n -> [n]_q x^(n-1)``.
        '''
        return XPoly([q_bracket(index, q) * value
                      for index, value in enumerate(self.coeffs)][1:])

    def q_inverse_derivative(self, q):
        '''
        ``D_{1/q}``: ``x^n -> q^(1-n) [n]_q x^(n-1)``.
        '''
        return XPoly([q_bracket(index, q) * value * q ** (1 - index)
                      for index, value in enumerate(self.coeffs)][1:])

    def derivative(self):
        return XPoly([index * value for index, value in enumerate(self.coeffs)][1:])

    def monic(self):
        return XPoly([value / self.leading_coefficient() for value in self.coeffs])

    def integrate(self, moment):
        '''
        Applies a linear moment functional ``x^i -> moment(i)``.
        '''
        total = 0
        for index, value in enumerate(self.coeffs):
            if value != 0:
                total = total + value * moment(index)
        return total

    def __str__(self):
        pieces = []
        for index, value in enumerate(self.coeffs):
            if value == 0:
                continue
            power = '' if index == 0 else ('x' if index == 1 else 'x^{0}'.format(index))
            pieces.append('({0}){1}'.format(value, '*' + power if power else ''))
        return ' + '.join(pieces) if pieces else '0'

    __repr__ = __str__


def stieltjes_polynomials(moment, count):
    '''
    Monic orthogonal polynomials ``p_0 .. p_{count-1}`` and their squared
    norms ``h_j`` from a moment functional, by the three-term recurrence.

    :returns: Tuple ``(polys, norms)``.
    :raises ZeroDivisionError: if a norm vanishes.
    '''
    x = XPoly.x()
    polys = [XPoly([1])]
    norms = [polys[0].integrate(moment)]
    previous = XPoly()
    for index in range(count - 1):
        current = polys[-1]
        a = (x * current * current).integrate(moment) / norms[-1]
        b = norms[-1] / norms[-2] if index > 0 else 0
        following = x * current - current * a - previous * b
        previous = current
        polys.append(following)
        norms.append((following * following).integrate(moment))
        if norms[-1] == 0:
            raise ZeroDivisionError('Vanishing norm at degree {0}'.format(index + 1))
    return polys, norms
