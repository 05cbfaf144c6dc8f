from __future__ import absolute_import
import unittest
from fractions import Fraction


class TestCase(unittest.TestCase):

    '''
    A test case that supports comparing exact rational functions, relative
    closeness of floats and clean audit entries.
    '''

    RELATIVE_TOLERANCE = 1e-10

    def assertRatEqual(self, first, second, msg=None):
        '''
        Asserts equality of two exact values (:class:`RatFuncQ`, Fraction or
        int) after canonical reduction, reporting both in printed form.
        '''
        if first != second:
            if not msg:
                msg = '{0} != {1}'.format(first, second)
            raise self.failureException(msg)

    def assertRatListEqual(self, first, second, msg=None):
        '''
        Element-wise :meth:`assertRatEqual` over two sequences.
        '''
        first, second = list(first), list(second)
        if len(first) != len(second):
            raise self.failureException(
                'Size mismatch; {0} != {1}'.format(first, second))
        for index, (left, right) in enumerate(zip(first, second)):
            self.assertRatEqual(left, right, msg or 'item {0}: {1} != {2}'.format(index, left, right))

    def assertRelativeClose(self, first, second, tolerance=RELATIVE_TOLERANCE,
                            msg=None):
        '''
        Asserts ``|first - second| <= tolerance * max(1, |second|)``.
        '''
        first, second = float(first), float(second)
        scale = max(1.0, abs(second))
        if abs(first - second) > tolerance * scale:
            if not msg:
                msg = '{0} != {1} within relative tolerance {2}'.format(
                    first, second, tolerance)
            raise self.failureException(msg)

    def assertAuditClean(self, entry, allowed=('exact',), msg=None):
        '''
        Asserts that an :class:`AuditEntry` has one of the allowed statuses.
        '''
        if entry.status not in allowed:
            if not msg:
                msg = '{0}: status {1} not in {2}; witness {3}'.format(
                    entry.identity, entry.status, allowed, entry.witness)
            raise self.failureException(msg)


def frac(value):
    '''
    Shorthand for building a :class:`Fraction` in test tables.
    '''
    return Fraction(value)
