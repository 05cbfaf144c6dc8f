'''
Exact integer and rational helpers used by the classical (q = 1) ensembles.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import division, absolute_import
from fractions import Fraction
from math import comb, factorial


def double_factorial(n):
    '''
    Calculates n!! with the conventions (-1)!! = 0!! = 1.

    :param n: Integer >= -1.
    :type n: int

    :returns: Double factorial.
    :rtype: int
    '''
    if n < -1:
        raise ValueError('double factorial undefined for {0}'.format(n))
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def rising_factorial(a, n):
    '''
    Pochhammer symbol (a)_n = a (a + 1) ... (a + n - 1).

    :param a: Base (int, Fraction or any ring element).
    :param n: Number of factors, n >= 0.
    :type n: int
    '''
    result = 1
    for i in range(n):
        result = result * (a + i)
    return result


def catalan(k):
    '''
    The k-th Catalan number binom(2k, k) / (k + 1).

    :rtype: int
    '''
    return comb(2 * k, k) // (k + 1)


def binomial(n, k):
    '''
    Binomial coefficient that is zero outside 0 <= k <= n.
    '''
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def as_fraction(value):
    '''
    Coerces an int, Fraction or ``'p/q'`` string into a :class:`Fraction`.
    '''
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


__all__ = ['double_factorial', 'rising_factorial', 'catalan', 'binomial',
           'as_fraction', 'factorial']
