'''
Tests overall package functions and classes.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import unittest
from fractions import Fraction
import qmoments
from qmoments import (Q, discrete_q_hermite, little_q_laguerre, gaussian, density_moment_closed,
                      schur_average_closed, schur_average_oracle, Partition, run_suite)
from qmoments.util.test import TestCase


class TestModule(unittest.TestCase):

    '''
    Test module loading.
    '''

    def test_dir(self):
        names = set(dir(qmoments))
        for name in ('__all__', '__doc__', '__version__', 'RatFuncQ', 'moment_table',
                     'verify_annihilation', 'AuditReport', 'ConfigError'):
            self.assertIn(name, names)
        self.assertEqual(53, len(qmoments.__all__))

    def test_get_attr(self):
        self.assertEqual(qmoments.__getattr__('__package__'), 'qmoments')
        self.assertRaises(AttributeError, getattr, qmoments, 'unknown_name')


class TestImport(unittest.TestCase):

    '''
    Test that every exported name can be imported.
    '''

    def test_import_all(self):
        for item in qmoments.__all__:
            self.assertNotEqual(None, getattr(qmoments, item))


class TestExamples(TestCase):

    '''
    Example of qmoments function usage.
    '''

    def test_density_moment(self):
        '''
        ``m_(2,2) = (1 - q)(2 + q + q^2)``, and at ``q = 1/2``.
        '''
        value = density_moment_closed(discrete_q_hermite(), 2, 2)
        self.assertRatEqual(value, (1 - Q) * (2 + Q + Q ** 2))
        self.assertEqual(value.eval(Fraction(1, 2)), Fraction(11, 8))

    def test_schur_average(self):
        '''
        Closed form and oracle of ``<s_(2,1)>``.
        '''
        weight = little_q_laguerre(1)
        kappa = Partition([2, 1])
        self.assertRatEqual(schur_average_closed(weight, kappa, 2),
                            schur_average_oracle(weight, kappa, 2))

    def test_classical(self):
        '''
        ``m_(2,3) = 9/2`` for ``exp(-x^2)``.
        '''
        self.assertEqual(density_moment_closed(gaussian(), 2, 3), Fraction(9, 2))

    def test_audit(self):
        '''
        The q-series section of the audit is clean.
        '''
        report = run_suite(sections=['q_series'])
        self.assertEqual(report.mismatches(), [])
        self.assertGreater(len(report), 0)
