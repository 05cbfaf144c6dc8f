'''
Tests the identity audit classification.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.audit import (monomial_ratio, AuditEntry, AuditReport, IdentityCheck, compare,
                            compare_series, EXACT, MONOMIAL, MISMATCH, SCHEMA_VERSION)
from qmoments.exact_algebra import Q, S
from qmoments.q_operators.series import FormalSeries
from qmoments.util.test import TestCase


class TestMonomialRatio(TestCase):

    '''
    ``printed = c q^e truth``.
    '''

    def test_q(self):
        '''
        Ratios in ``q``.
        '''
        self.assertEqual(monomial_ratio(2 * Q ** 3 * (1 - Q), 1 - Q), (2, 3))
        self.assertEqual(monomial_ratio(Q ** -1, 1), (1, -1))
        self.assertIsNone(monomial_ratio(1 + Q, 1))

    def test_s(self):
        '''
        Exponents in ``s`` are reported in units of ``q``.
        '''
        self.assertEqual(monomial_ratio(S ** 3, S), (1, 1))
        self.assertEqual(monomial_ratio(S ** 2, S), (1, Fraction(1, 2)))

    def test_scalars(self):
        '''
        Rational ratios, and zero on either side.
        '''
        self.assertEqual(monomial_ratio(Fraction(3), 1), (3, 0))
        self.assertIsNone(monomial_ratio(0, 1))
        self.assertIsNone(monomial_ratio(1, 0))


class TestIdentityCheck(TestCase):

    '''
    Cell accumulation.
    '''

    def test_exact(self):
        '''
        Equal cells, zero cells included.
        '''
        check = IdentityCheck('identity')
        self.assertTrue(check.check(1 - Q, 1 - Q, k=1))
        self.assertTrue(check.check(0, Q * 0, k=2))
        entry = check.entry()
        self.assertEqual(entry.status, EXACT)
        self.assertEqual(entry.tested, [{'k': 1}, {'k': 2}])

    def test_monomial(self):
        '''
        One shared monomial.
        '''
        check = IdentityCheck('identity', 'dqh')
        check.check(Q * (1 + Q), 1 + Q, k=1)
        check.check(Q * (1 - Q ** 2), 1 - Q ** 2, k=2)
        entry = check.entry()
        self.assertEqual(entry.status, MONOMIAL)
        self.assertEqual((entry.factor, entry.exponent), (1, 1))
        self.assertEqual(entry.as_dict()['exponent'], '1')
        self.assertEqual(entry.as_dict()['ensemble'], 'dqh')

    def test_mismatch(self):
        '''
        Two different ratios make the second cell the witness.
        '''
        check = IdentityCheck('identity')
        check.check(Q * 2, Q, k=1)
        self.assertFalse(check.check(Q * 3, Q, k=2))
        self.assertFalse(check.check(Q, Q, k=3))
        entry = check.entry()
        self.assertEqual(entry.status, MISMATCH)
        self.assertEqual(entry.witness['cell'], {'k': 2})
        self.assertEqual(entry.witness['difference'], str(Q * 2))
        self.assertEqual(len(entry.tested), 3)

    def test_record(self):
        '''
        Predicate cells.
        '''
        check = IdentityCheck('identity')
        self.assertTrue(check.record(True, N=1))
        self.assertFalse(check.record(False, 'residual 6', N=2))
        self.assertEqual(check.entry().witness, {'cell': {'N': 2}, 'detail': 'residual 6'})

    def test_compare(self):
        '''
        Single cells and series.
        '''
        self.assertEqual(compare('identity', Fraction(2), 1).factor, 2)
        entry = compare_series('identity', FormalSeries([1, 2, 4]), FormalSeries([1, 2, 3]))
        self.assertEqual(entry.status, MISMATCH)
        self.assertEqual(entry.witness['cell'], {'z': 2})


class TestReport(TestCase):

    '''
    Report collection and its dict form.
    '''

    def test_counts(self):
        '''
        Counts per status and lookup.
        '''
        report = AuditReport()
        report.add(AuditEntry('first', 'dqh'))
        report.add(AuditEntry('first', 'sw', MONOMIAL, 2, 1))
        report.extend([AuditEntry('second', status=MISMATCH, witness={'cell': {}})])
        self.assertEqual(report.counts(), {EXACT: 1, MONOMIAL: 1, MISMATCH: 1})
        self.assertEqual(len(report.find('first')), 2)
        self.assertEqual(len(report.find('first', 'sw')), 1)
        self.assertEqual(report.identities(), set(['first', 'second']))
        self.assertEqual([entry.identity for entry in report.mismatches()], ['second'])
        data = report.as_dict()
        self.assertEqual(data['schema'], SCHEMA_VERSION)
        self.assertEqual(len(data['entries']), 3)

    def test_bad_status(self):
        '''
        Unknown statuses are rejected.
        '''
        self.assertRaises(ValueError, AuditEntry, 'identity', status='unknown')
