'''
Plain text plot data: two whitespace separated columns ``x rho(x)``.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.data import DataIOError, FORMAT_PLOT, resolve_filepath


def format_plot_data(points):
    return ''.join('{0!r} {1!r}\n'.format(float(x), float(y)) for x, y in points)


def output_plot_data(filepath, points):
    '''
    Writes ``(x, y)`` pairs one per line.

    :returns: The path written.
    '''
    filepath = resolve_filepath(filepath, FORMAT_PLOT)
    with open(filepath, 'w') as plot_file:
        plot_file.write(format_plot_data(points))
    return filepath


def input_plot_data(filepath):
    '''
    Reads ``(x, y)`` pairs; blank lines and ``#`` comments are skipped.
    '''
    points = []
    try:
        with open(filepath, 'r') as plot_file:
            for number, line in enumerate(plot_file, 1):
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                columns = line.split()
                if len(columns) != 2:
                    raise DataIOError('Line {0} of {1} does not have two columns'.format(
                        number, filepath))
                points.append((float(columns[0]), float(columns[1])))
    except IOError as exception:
        raise DataIOError('Error occurred processing file: ' + filepath, exception)
    except ValueError as exception:
        raise DataIOError('Non numeric value in file: ' + filepath, exception)
    return points
