'''
Tests the command line front end and its exit codes.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock
from qmoments.audit import AuditEntry, AuditReport, MISMATCH
from qmoments.cli import main, parse_q, evaluate
from qmoments.exact_algebra import Q, S
from qmoments.settings import OUTPUT_DIR_ENV
from qmoments.suite import ORACLE_IDENTITY
from qmoments.util import ConfigError, OracleDisagreementError
from fractions import Fraction


class TestParsing(unittest.TestCase):

    '''
    Exact ``q`` values.
    '''

    def test_parse_q(self):
        '''
        Rationals strictly between zero and one.
        '''
        self.assertEqual(parse_q('1/2'), Fraction(1, 2))
        for text in ('3/2', '0', '1', 'abc', '1/0'):
            self.assertRaises(ConfigError, parse_q, text)

    def test_evaluate(self):
        '''
        Functions of ``s`` need a rational square.
        '''
        self.assertEqual(evaluate(1 - Q, Fraction(1, 2)), Fraction(1, 2))
        self.assertEqual(evaluate(S ** -2, Fraction(1, 4)), 4)
        self.assertRaises(ConfigError, evaluate, S ** -2, Fraction(1, 2))
        self.assertEqual(evaluate(Fraction(3), Fraction(1, 2)), 3)
        self.assertEqual(evaluate(1 - Q, None), 1 - Q)


class TestMain(unittest.TestCase):

    '''
    Runs commands with standard output captured.
    '''

    def setUp(self):
        environment = mock.patch.dict(os.environ)
        environment.start()
        self.addCleanup(environment.stop)
        os.environ.pop(OUTPUT_DIR_ENV, None)
        for stream in ('sys.stdout', 'sys.stderr'):
            patcher = mock.patch(stream, new_callable=io.StringIO)
            setattr(self, stream.split('.')[1], patcher.start())
            self.addCleanup(patcher.stop)

    def run_json(self, argv):
        status = main(argv)
        return status, json.loads(self.stdout.getvalue())

    def test_moments(self):
        '''
        ``m_(1,1) = 7/8`` for the little q-Laguerre weight at ``alpha = 2``,
        ``q = 1/2``.
        '''
        status, data = self.run_json(['moments', '--ensemble', 'lql', '--alpha', '2',
                                      '--k', '1', '--n', '1', '--q', '1/2'])
        self.assertEqual(status, 0)
        self.assertEqual(data['entries'], [{'k': 1, 'N': 1, 'value': '7/8',
                                            'oracle_agrees': True}])

    def test_moments_sw(self):
        '''
        Stieltjes-Wigert values are evaluated at ``s = sqrt(q)``.
        '''
        status, data = self.run_json(['moments', '--ensemble', 'sw', '--k', '1', '--n', '1',
                                      '--q', '1/4'])
        self.assertEqual(status, 0)
        self.assertEqual(data['entries'][0]['value'], '4')
        self.assertEqual(main(['moments', '--ensemble', 'sw', '--k', '1', '--n', '1',
                               '--q', '1/2']), 1)

    def test_moments_csv(self):
        '''
        CSV tables on standard output.
        '''
        status = main(['moments', '--ensemble', 'gaussian', '--k', '2', '--n', '2',
                       '--format', 'csv'])
        self.assertEqual(status, 0)
        self.assertEqual(self.stdout.getvalue(), 'ensemble,k,N,value\ngaussian,2,2,2\n')

    def test_schur(self):
        '''
        ``<s_(2)>`` at ``N = 1`` for ``exp(-x^2)``.
        '''
        status, data = self.run_json(['schur', '--ensemble', 'gaussian', '--partition', '2',
                                      '--n', '1'])
        self.assertEqual(status, 0)
        self.assertEqual(data['closed'], '1/2')
        self.assertEqual(data['audit']['status'], 'exact')

    def test_qde(self):
        '''
        The fourth order equation at ``N = 0``.
        '''
        status, data = self.run_json(['qde', '--ensemble', 'dqh', '--n', '0', '--order', '12'])
        self.assertEqual(status, 0)
        self.assertEqual(data['result']['status'], 'pass')

    def test_output_directory(self):
        '''
        Results go to the default file name inside ``-o``.
        '''
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        status = main(['moments', '--ensemble', 'dqh', '--k', '2', '--n', '1',
                       '-o', directory])
        self.assertEqual(status, 0)
        with open(os.path.join(directory, 'report.json')) as json_file:
            data = json.load(json_file)
        self.assertEqual(data['entries'][0]['value'], str(1 - Q))

    def test_config_errors(self):
        '''
        Bad input exits with ``1``.
        '''
        for argv in (['moments', '--ensemble', 'lql', '--k', '1', '--n', '1', '--q', '3/2'],
                     ['moments', '--ensemble', 'lql', '--k', '1', '--n', '1', '--q', 'abc'],
                     ['moments', '--ensemble', 'gaussian', '--k', '1', '--n', '1', '--q', '1/2'],
                     ['moments', '--ensemble', 'unknown'],
                     ['moments', '--ensemble', 'dqh', '--k', '0'],
                     ['schur', '--ensemble', 'gaussian', '--partition', '1', '--n', '1',
                      '--format', 'csv'],
                     ['unknown']):
            self.assertEqual(main(argv), 1, argv)
        self.assertIn('error:', self.stderr.getvalue())

    def verify_output(self, argv):
        self.stdout.seek(0)
        self.stdout.truncate()
        status = main(['verify'] + argv)
        return status, self.stdout.getvalue()

    def test_clean(self):
        '''
        A clean section exits with ``0``; ``alpha = 0`` is audited.
        '''
        status, data = self.run_json(['verify', '--section', 'pearson', '--ensemble', 'lql',
                                      '--alpha', '0'])
        self.assertEqual(status, 0)
        self.assertEqual(data['counts'][MISMATCH], 0)
        self.assertEqual([entry['identity'] for entry in data['entries']], ['pearson_pair'])
        self.assertEqual(data['entries'][0]['status'], 'exact')

    def test_deterministic(self):
        '''
        Two runs write identical JSON.
        '''
        argv = ['--section', 'q_series', '--section', 'pearson', '--ensemble', 'dqh',
                '--kmax', '2', '--nmax', '2']
        first_status, first = self.verify_output(argv)
        second_status, second = self.verify_output(argv)
        self.assertEqual(first_status, 0)
        self.assertEqual(second_status, 0)
        self.assertTrue(first)
        self.assertEqual(first, second)

    def test_mismatch(self):
        '''
        Any mismatch exits with ``2``.
        '''
        report = AuditReport([AuditEntry('first'), AuditEntry('second', status=MISMATCH)])
        with mock.patch('qmoments.suite.run_suite', return_value=report):
            status, text = self.verify_output([])
        self.assertEqual(status, 2)
        self.assertEqual(json.loads(text)['counts'][MISMATCH], 1)

    def test_oracle_disagreement(self):
        '''
        Disagreeing oracle routes exit with ``3``, whether reported or raised.
        '''
        report = AuditReport([AuditEntry('second', status=MISMATCH),
                              AuditEntry(ORACLE_IDENTITY, status=MISMATCH)])
        with mock.patch('qmoments.suite.run_suite', return_value=report):
            self.assertEqual(self.verify_output([])[0], 3)
        error = OracleDisagreementError('routes differ')
        with mock.patch('qmoments.suite.run_suite', side_effect=error):
            self.assertEqual(self.verify_output([])[0], 3)
        self.assertIn('routes differ', self.stderr.getvalue())
