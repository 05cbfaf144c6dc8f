'''
Tests the JSON, CSV and plot data input and output functions.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import

import json
import os
import shutil
import tempfile
import unittest

from qmoments.audit import AuditEntry, AuditReport, MONOMIAL
from qmoments.data import DataIOError, FORMAT_CSV, resolve_filepath
from qmoments.data.csvutils import (output_moment_table_csv, input_moment_table_csv,
                                    output_probe_csv, input_probe_csv, SUMMARY_N)
from qmoments.data.jsonutils import (output_report_json, input_report_json, output_json,
                                     dumps)
from qmoments.data.plotdata import output_plot_data, input_plot_data
from qmoments.ensembles import weights
from qmoments.ensembles.density import moment_table
from qmoments.exact_algebra import Q


class Extrapolated(object):

    def __init__(self, leading):
        self.leading = leading


class Probed(object):

    def __init__(self, probe, leading):
        self.probe = probe
        self.extrapolation = Extrapolated(leading)


class DataTestCase(unittest.TestCase):

    '''
    Writes into a fresh temporary directory.
    '''

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def path(self, name):
        return os.path.join(self.directory, name)


class TestJsonUtils(DataTestCase):

    '''
    Audit reports as JSON.
    '''

    def report(self):
        return AuditReport([AuditEntry('first', 'dqh', tested=[{'k': 1}]),
                            AuditEntry('second', 'sw', MONOMIAL, 1, 1)])

    def test_round_trip(self):
        '''
        A report written and read back keeps its entries.
        '''
        filepath = output_report_json(self.path('report.json'), self.report())
        data = input_report_json(filepath)
        self.assertEqual(data['counts']['exact'], 1)
        self.assertEqual([entry['identity'] for entry in data['entries']], ['first', 'second'])
        self.assertEqual(data['entries'][1]['exponent'], '1')

    def test_directory(self):
        '''
        A directory receives the default file name.
        '''
        filepath = output_report_json(self.directory, self.report())
        self.assertEqual(filepath, self.path('report.json'))
        self.assertTrue(os.path.exists(filepath))

    def test_exact_values(self):
        '''
        Exact values are written as canonical strings.
        '''
        filepath = output_json(self.path('values.json'), {'value': 1 - Q, 'cells': [(1, 2)]})
        with open(filepath) as json_file:
            data = json.load(json_file)
        self.assertEqual(data, {'value': str(1 - Q), 'cells': [[1, 2]]})
        self.assertEqual(json.loads(dumps({'b': 1, 'a': None})), {'a': None, 'b': 1})

    def test_bad_schema(self):
        '''
        Another schema version is rejected.
        '''
        filepath = output_json(self.path('other.json'), {'schema': 0, 'entries': []})
        self.assertRaises(DataIOError, input_report_json, filepath)

    def test_missing_entries(self):
        '''
        Reports need entries.
        '''
        filepath = output_json(self.path('empty.json'), {'schema': 1})
        self.assertRaises(DataIOError, input_report_json, filepath)

    def test_unparsable(self):
        '''
        Malformed and missing files raise :class:`DataIOError`.
        '''
        filepath = self.path('broken.json')
        with open(filepath, 'w') as json_file:
            json_file.write('{"schema": ')
        self.assertRaises(DataIOError, input_report_json, filepath)
        self.assertRaises(DataIOError, input_report_json, self.path('missing.json'))


class TestCsvUtils(DataTestCase):

    '''
    Moment tables and probes as CSV.
    '''

    def test_moment_table(self):
        '''
        Values are kept as canonical strings.
        '''
        tables = [moment_table(weights.little_q_laguerre(0), [1], [1, 2]),
                  moment_table(weights.gaussian(), [2], [1])]
        filepath = output_moment_table_csv(self.directory, tables)
        self.assertEqual(filepath, resolve_filepath(self.directory, FORMAT_CSV))
        values = input_moment_table_csv(filepath)
        self.assertEqual(values[(weights.LITTLE_Q_LAGUERRE, 1, 1)], str(1 - Q))
        self.assertEqual(values[(weights.GAUSSIAN, 2, 1)], '1/2')
        self.assertEqual(len(values), 3)

    def test_probe(self):
        '''
        Probe values and the extrapolated summary row.
        '''
        from qmoments.asymptotics import ScalingProbe
        probe = ScalingProbe('sw', 1, 0.5, [10, 20], [1.25, 1.5])
        filepath = output_probe_csv(self.path('probe.csv'), [Probed(probe, 1.75)])
        values, summaries = input_probe_csv(filepath)
        self.assertEqual(values, {('sw', 1, 0.5, 10): 1.25, ('sw', 1, 0.5, 20): 1.5})
        self.assertEqual(summaries, {('sw', 1, 0.5): 1.75})
        with open(filepath) as csv_file:
            self.assertIn(SUMMARY_N, csv_file.read())

    def test_bad_header(self):
        '''
        Files with another header are rejected.
        '''
        filepath = self.path('other.csv')
        with open(filepath, 'w') as csv_file:
            csv_file.write('a,b\n1,2\n')
        self.assertRaises(DataIOError, input_moment_table_csv, filepath)

    def test_bad_row(self):
        '''
        Short rows and non integer indices are rejected.
        '''
        filepath = self.path('short.csv')
        with open(filepath, 'w') as csv_file:
            csv_file.write('ensemble,k,N,value\ngaussian,1\n')
        self.assertRaises(DataIOError, input_moment_table_csv, filepath)
        with open(filepath, 'w') as csv_file:
            csv_file.write('ensemble,k,N,value\ngaussian,one,1,2\n')
        self.assertRaises(DataIOError, input_moment_table_csv, filepath)


class TestPlotData(DataTestCase):

    '''
    Two column plot data.
    '''

    def test_round_trip(self):
        '''
        Floats survive exactly.
        '''
        points = [(0.1, 0.25), (1.0 / 3, 2.0)]
        filepath = output_plot_data(self.directory, points)
        self.assertEqual(os.path.basename(filepath), 'density.dat')
        self.assertEqual(input_plot_data(filepath), points)

    def test_comments(self):
        '''
        Blank lines and comments are skipped.
        '''
        filepath = self.path('commented.dat')
        with open(filepath, 'w') as plot_file:
            plot_file.write('# x rho\n\n1 2\n')
        self.assertEqual(input_plot_data(filepath), [(1.0, 2.0)])

    def test_malformed(self):
        '''
        Wrong column counts and non numeric values.
        '''
        filepath = self.path('bad.dat')
        with open(filepath, 'w') as plot_file:
            plot_file.write('1 2 3\n')
        self.assertRaises(DataIOError, input_plot_data, filepath)
        with open(filepath, 'w') as plot_file:
            plot_file.write('1 x\n')
        self.assertRaises(DataIOError, input_plot_data, filepath)

    def test_unknown_format(self):
        '''
        Only known formats have default file names.
        '''
        self.assertRaises(DataIOError, resolve_filepath, self.directory, 'xml')
