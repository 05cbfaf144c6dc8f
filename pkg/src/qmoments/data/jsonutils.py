'''
JSON output module for audit reports and check results.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import codecs
import json
from qmoments.audit import SCHEMA_VERSION
from qmoments.data import DataIOError, FORMAT_JSON, resolve_filepath


def canonical(value):
    '''
    Converts exact values (rationals, rational functions) nested in lists and
    dicts into their canonical strings so that ``json`` can serialise them.
    '''
    if isinstance(value, dict):
        return dict((str(key), canonical(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [canonical(item) for item in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def dumps(data):
    '''
    The canonical text of ``data``: keys sorted, four space indent.
    '''
    return json.dumps(canonical(data), sort_keys=True, indent=4)


def __write_json__(filepath, data):
    '''
    Write a JSON file using the given data.
    '''
    # Create a default filename if a dir is specified
    filepath = resolve_filepath(filepath, FORMAT_JSON)
    json_file = codecs.open(filepath, 'w+', 'utf-8')
    try:
        json.dump(canonical(data), fp=json_file, sort_keys=True, indent=4)
    finally:
        json_file.close()
    return filepath


def output_json(filepath, data):
    '''
    Writes any command result; exact values become canonical strings.

    :returns: The path written.
    '''
    return __write_json__(filepath, data)


def output_report_json(filepath, report):
    '''
    Serialises an :class:`qmoments.audit.AuditReport` (or any object with
    ``as_dict``).

    :returns: The path written.
    '''
    return __write_json__(filepath, report.as_dict())


def input_report_json(filepath):
    '''
    Reads a report written by :func:`output_report_json`.

    :raises DataIOError: if the file cannot be parsed or carries another
                         schema version.
    '''
    try:
        with codecs.open(filepath, 'r', 'utf-8') as json_file:
            data = json.load(json_file)
    except (IOError, ValueError) as exception:
        raise DataIOError('Error occurred processing file: ' + filepath, exception)
    if data.get('schema') != SCHEMA_VERSION:
        raise DataIOError('Schema {0} expected, but encountered \'{1}\' for file: {2}'.format(
            SCHEMA_VERSION, data.get('schema'), filepath))
    if 'entries' not in data:
        raise DataIOError('The entry \'entries\' was expected in JSON for file: ' + filepath)
    return data
