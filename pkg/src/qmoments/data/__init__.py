'''
Data I/O package.  Used to export audit reports as JSON, moment tables and
probe values as CSV and limiting density samples as plain two column text,
and to read them back.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import os
from qmoments.util import QMomentsError

FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'
FORMAT_PLOT = 'plot-data'
FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_PLOT)

DEFAULT_FILENAMES = {FORMAT_JSON: 'report.json',
                     FORMAT_CSV: 'table.csv',
                     FORMAT_PLOT: 'density.dat'}


class DataIOError(QMomentsError):

    '''
    Indicates that an input or output processing error has occurred.
    '''

    def __init__(self, message, exception=None):
        '''
        Initializer.

        :param message: Explanation for the exception.
        :param exception: The underlying exception, if any.
        :type message: str
        '''
        QMomentsError.__init__(self, message)
        self.exception = exception


def resolve_filepath(filepath, output_format):
    '''
    Appends the default file name of ``output_format`` when ``filepath`` is
    a directory.
    '''
    if output_format not in DEFAULT_FILENAMES:
        raise DataIOError('Unknown output format \'{0}\''.format(output_format))
    if os.path.isdir(filepath):
        filepath = os.path.join(filepath, DEFAULT_FILENAMES[output_format])
    return filepath
