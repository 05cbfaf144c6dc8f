'''
CSV output module for moment tables and scaling probes.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import csv
from qmoments.data import DataIOError, FORMAT_CSV, resolve_filepath


MOMENT_HEADER = ['ensemble', 'k', 'N', 'value']
PROBE_HEADER = ['ensemble', 'k', 'lambda', 'N', 'value']
SUMMARY_N = 'extrapolated'


def moment_rows(tables):
    '''
    ``(ensemble, k, N, value)`` rows of one or more
    :class:`qmoments.ensembles.density.MomentTable` objects.
    '''
    for table in tables:
        for k, n, value in table.rows():
            yield table.ensemble, k, n, value


def probe_rows(results):
    '''
    ``(ensemble, k, lambda, N, value)`` rows of probe results
    (:class:`qmoments.asymptotics.ProbeResult`); each probe ends with a
    summary row holding the extrapolated leading term with ``N`` set to
    :data:`SUMMARY_N`.
    '''
    for result in results:
        probe = result.probe
        for row in probe.rows():
            yield row
        yield probe.ensemble, probe.k, probe.lam, SUMMARY_N, result.extrapolation.leading


def write_rows(stream, header, rows):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(value) if isinstance(value, float) else str(value)
                         for value in row])


def _output(filepath, header, rows):
    filepath = resolve_filepath(filepath, FORMAT_CSV)
    with open(filepath, 'w', newline='') as csv_file:
        write_rows(csv_file, header, rows)
    return filepath


def _read_rows(filepath, header):
    try:
        with open(filepath, 'r', newline='') as csv_file:
            rows = list(csv.reader(csv_file))
    except IOError as exception:
        raise DataIOError('Error occurred processing file: ' + filepath, exception)
    if not rows or rows[0] != header:
        raise DataIOError('Header {0} expected in file: {1}'.format(','.join(header), filepath))
    for number, row in enumerate(rows[1:], 2):
        if len(row) != len(header):
            raise DataIOError('Row {0} of {1} has {2} columns, expected {3}'.format(
                number, filepath, len(row), len(header)))
    return rows[1:]


def output_moment_table_csv(filepath, tables):
    '''
    Writes moment tables with the columns ``ensemble,k,N,value``.

    :returns: The path written.
    '''
    return _output(filepath, MOMENT_HEADER, moment_rows(tables))


def input_moment_table_csv(filepath):
    '''
    Reads a moment table back as a dict ``(ensemble, k, N) -> value`` where
    the value is kept as its canonical string.
    '''
    result = {}
    for ensemble, k, n, value in _read_rows(filepath, MOMENT_HEADER):
        try:
            result[(ensemble, int(k), int(n))] = value
        except ValueError as exception:
            raise DataIOError('Non integer k or N in file: ' + filepath, exception)
    return result


def output_probe_csv(filepath, results):
    '''
    Writes probe results with the columns ``ensemble,k,lambda,N,value``.
    '''
    return _output(filepath, PROBE_HEADER, probe_rows(results))


def input_probe_csv(filepath):
    '''
    Reads a probe file.

    :returns: Tuple ``(values, summaries)``: ``values`` maps
              ``(ensemble, k, lambda, N)`` and ``summaries`` maps
              ``(ensemble, k, lambda)`` to floats.
    '''
    values, summaries = {}, {}
    for ensemble, k, lam, n, value in _read_rows(filepath, PROBE_HEADER):
        try:
            key = (ensemble, int(k), float(lam))
            if n == SUMMARY_N:
                summaries[key] = float(value)
            else:
                values[key + (int(n),)] = float(value)
        except ValueError as exception:
            raise DataIOError('Malformed probe row in file: ' + filepath, exception)
    return values, summaries
