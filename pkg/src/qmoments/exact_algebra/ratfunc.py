'''
Exact rational functions of one variable over the rationals.

Every :class:`RatFuncQ` is kept in the canonical form ``q^e * A / B`` where
``A(0) != 0``, ``B(0) != 0``, ``B`` is monic and ``gcd(A, B) == 1``, so that
structural equality is mathematical equality.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from sympy import Poly, Symbol, fraction, sympify, together, ZZ
from sympy.polys.euclidtools import dup_inner_gcd
from qmoments.exact_algebra.poly import (PolyQ, integerize, to_dup, from_dup,
                                         format_terms)
from qmoments.util import PoleError


SCALARS = (int, Fraction)


def reduce_pair(numer, denom):
    '''
    Cancels the greatest common divisor of two lowest-first coefficient lists
    whose constant terms are non-zero.

    :returns: Cofactor lists ``(numer', denom')`` with ``denom'`` monic.
    '''
    if len(denom) == 1:
        scale = denom[0]
        return [coeff / scale for coeff in numer], [Fraction(1)]
    if len(numer) == 1:
        scale = denom[-1]
        return [numer[0] / scale], [coeff / scale for coeff in denom]
    numer_mult, numer_ints = integerize(numer)
    denom_mult, denom_ints = integerize(denom)
    _, numer_co, denom_co = dup_inner_gcd(to_dup(numer_ints), to_dup(denom_ints), ZZ)
    numer_co, denom_co = from_dup(numer_co), from_dup(denom_co)
    # numer/denom == (numer_co / numer_mult) / (denom_co / denom_mult)
    lead = Fraction(denom_co[-1] * numer_mult, denom_mult)
    return ([Fraction(value) / lead for value in numer_co],
            [Fraction(value * numer_mult, denom_mult) / lead for value in denom_co])


class RatFuncQ(object):

    '''
    Immutable rational function ``num / den`` in the variable ``q`` (or
    ``s``, where ``q = s^2``).

    :param num: Numerator (PolyQ, int or Fraction).
    :param den: Denominator (PolyQ, int or Fraction); defaults to 1.
    :param var: Variable tag used when neither argument is a PolyQ.
    :raises PoleError: if the denominator is zero.
    '''

    __slots__ = ('num', 'den')

    def __init__(self, num=0, den=1, var=None):
        if var is None:
            var = next((item.var for item in (num, den) if isinstance(item, PolyQ)), 'q')
        if not isinstance(num, PolyQ):
            num = PolyQ.constant(num, var)
        if not isinstance(den, PolyQ):
            den = PolyQ.constant(den, var)
        if num.var != den.var:
            raise ValueError('Numerator and denominator variables differ')
        if den.is_zero():
            raise PoleError('Rational function with a zero denominator')
        self.num, self.den = self._canonical(num, den)

    @staticmethod
    def _canonical(num, den):
        var = num.var
        if num.is_zero():
            return PolyQ((), 0, var), PolyQ.constant(1, var)
        numer_val, numer = num.laurent()
        denom_val, denom = den.laurent()
        numer, denom = reduce_pair(numer, denom)
        return (PolyQ.from_laurent(numer_val - denom_val, numer, var),
                PolyQ(denom, 0, var))

    @classmethod
    def _raw(cls, num, den):
        '''
        Wraps an already canonical pair without re-reducing it.
        '''
        result = cls.__new__(cls)
        result.num = num
        result.den = den
        return result

    @classmethod
    def gen(cls, var='q'):
        '''
        The generator ``q`` (or ``s``).
        '''
        return cls(PolyQ.monomial(1, 1, var))

    @classmethod
    def const(cls, value, var='q'):
        return cls(PolyQ.constant(value, var))

    @classmethod
    def monomial(cls, coeff, exponent, var='q'):
        return cls(PolyQ.monomial(coeff, exponent, var))

    @classmethod
    def parse(cls, text, var='q'):
        '''
        Parses a printed rational function such as ``(1 - q)/(1 + q^2)``.
        '''
        symbol = Symbol(var)
        expression = together(sympify(text.replace('^', '**'), locals={var: symbol}))
        numer, denom = fraction(expression)
        return cls(_from_sympy(numer, symbol, var)) / cls(_from_sympy(denom, symbol, var))

    @property
    def var(self):
        return self.num.var

    def _coerce(self, other):
        if isinstance(other, RatFuncQ):
            if other.var != self.var:
                raise ValueError('Cannot combine rational functions in {0} and {1}'.format(
                    self.var, other.var))
            return other
        if isinstance(other, SCALARS):
            return RatFuncQ._raw(PolyQ.constant(other, self.var), PolyQ.constant(1, self.var))
        if isinstance(other, PolyQ):
            return RatFuncQ(other)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.den.degree() == 0 and (self.num.is_zero() or
                                           (self.num.degree() == 0 and self.num.valuation() == 0))

    def constant_value(self):
        '''
        :returns: The value as a Fraction, or ``None`` if not constant.
        '''
        if self.is_zero():
            return Fraction(0)
        if self.is_constant():
            return self.num.coefficient(0)
        return None

    def as_monomial(self):
        '''
        :returns: Tuple ``(coefficient, exponent)`` when the value is
                  ``c * var^e`` with ``c != 0``, else ``None``.
        '''
        if self.den.degree() != 0:
            return None
        terms = list(self.num.terms())
        if len(terms) != 1:
            return None
        exponent, coeff = terms[0]
        return coeff, exponent

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFuncQ(self.num + other.num, self.den)
        return RatFuncQ(self.num * other.den + other.num * self.den,
                        self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ._raw(-self.num, self.den)

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
        if isinstance(other, SCALARS):
            if other == 0:
                return RatFuncQ(0, 1, self.var)
            return RatFuncQ._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFuncQ(0, 1, self.var)
        if other.den.degree() == 0 and self.den.degree() == 0:
            return RatFuncQ._raw(self.num * other.num, self.den)
        return RatFuncQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        '''
        Multiplicative inverse.

        :raises PoleError: for zero.
        '''
        if self.is_zero():
            raise PoleError('Division by the zero rational function')
        valuation, numer = self.num.laurent()
        lead = numer[-1]
        return RatFuncQ._raw(
            PolyQ.from_laurent(-valuation, [coeff / lead for coeff in self.den.coeffs], self.var),
            PolyQ([coeff / lead for coeff in numer], 0, self.var))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        valuation, numer = self.num.laurent()
        if not numer:
            if exponent == 0:
                return RatFuncQ.const(1, self.var)
            return self
        core = PolyQ(numer, 0, self.var) ** exponent
        return RatFuncQ._raw(PolyQ.from_laurent(valuation * exponent, list(core.coeffs), self.var),
                             self.den ** exponent)

    def __eq__(self, other):
        if isinstance(other, SCALARS):
            return self.constant_value() == other
        if isinstance(other, PolyQ):
            other = RatFuncQ(other)
        if not isinstance(other, RatFuncQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        value = self.constant_value()
        if value is not None:
            return hash(value)
        return hash((self.num, self.den))

    def eval(self, value):
        '''
        Evaluates at a point (Fraction exactly, other scalars by Horner).

        :raises PoleError: at a root of the reduced denominator or at zero
                           when negative powers are present.
        '''
        try:
            denom = self.den.eval(value)
            if denom == 0:
                raise PoleError('Pole of {0} at {1}'.format(self, value))
            return self.num.eval(value) / denom
        except ZeroDivisionError as error:
            if isinstance(error, PoleError):
                raise
            raise PoleError('Pole of {0} at {1}'.format(self, value))

    def eval_at_one(self):
        '''
        The exact value at ``q = 1`` (the classical limit).

        :raises PoleError: if 1 is a root of the reduced denominator.
        '''
        return self.eval(Fraction(1))

    def subs_inverse(self):
        '''
        Substitutes ``q -> 1/q``.
        '''
        return RatFuncQ(self.num.substitute_power(-1), self.den.substitute_power(-1))

    def subs_power(self, power):
        '''
        Substitutes ``q -> q^power``.
        '''
        return RatFuncQ(self.num.substitute_power(power), self.den.substitute_power(power))

    def to_s(self):
        '''
        Rewrites a function of ``q`` as a function of ``s`` with ``q = s^2``.
        '''
        if self.var != 'q':
            raise ValueError('Expected a function of q')
        squared = self.subs_power(2)
        return RatFuncQ._raw(squared.num.relabel('s'), squared.den.relabel('s'))

    def to_sympy(self):
        '''
        Converts into a sympy expression in the symbol named by ``var``.
        '''
        symbol = Symbol(self.var)
        numer = sum(sympify(coeff) * symbol ** exponent for exponent, coeff in self.num.terms())
        denom = sum(sympify(coeff) * symbol ** exponent for exponent, coeff in self.den.terms())
        return numer / denom

    def __str__(self):
        numer, denom = self.num, self.den
        multiplier, _ = integerize(list(numer.coeffs) + list(denom.coeffs))
        if denom.coefficient(0) < 0:
            multiplier = -multiplier
        numer, denom = numer * multiplier, denom * multiplier
        numer_text = format_terms(list(numer.terms()), self.var)
        if denom.degree() == 0 and denom.coefficient(0) == 1:
            return numer_text
        denom_text = format_terms(list(denom.terms()), self.var)
        if len(list(numer.terms())) > 1:
            numer_text = '(' + numer_text + ')'
        if len(list(denom.terms())) > 1:
            denom_text = '(' + denom_text + ')'
        return '{0} / {1}'.format(numer_text, denom_text)

    def __repr__(self):
        return 'RatFuncQ({0!r}, var={1!r})'.format(str(self), self.var)


def _from_sympy(expression, symbol, var):
    poly = Poly(expression, symbol)
    coeffs = [Fraction(int(coeff.p), int(coeff.q)) for coeff in reversed(poly.all_coeffs())]
    return PolyQ(coeffs, 0, var)


Q = RatFuncQ.gen('q')
S = RatFuncQ.gen('s')
