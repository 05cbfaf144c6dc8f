'''
Run configuration defaults.  Every command line option and every suite check
falls back onto these dictionaries, mirroring the way metric defaults are kept
in one place.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import os
from qmoments.util import ConfigError


ENSEMBLES = ('sw', 'dqh', 'lql', 'gaussian', 'laguerre')
Q_ENSEMBLES = ('sw', 'dqh', 'lql')

RUN_DEFAULTS = {
    'k_max': 4,
    'n_max': 4,
    'alpha': 0,
    'route': 'schur_sum',
    'output_dir': None,
}

AUDIT_DEFAULTS = {
    'k_max': 4,
    'n_max': 4,
    'schur_max_size': 4,
    'operator_order': 24,
    'operator_n_max': 3,
    'lql_alphas': (0, 1),
    'lql_operator_n': (1, 2),
    'pearson_degree': 8,
    'genfunc_n_max': 8,
    'coefficient_source': 'closed_form',
    'classical_n_max': 3,
    'classical_order': 12,
    'laguerre_alphas': (0, 1, 2),
    'jacobi_n_max': 2,
    'jacobi_parameters': ((0, 0), (0, 1), (1, 0), (1, 1)),
    'linearisation_n_max': 6,
    'linearisation_k_max': 4,
    'measure_p_max': 4,
    'q_series_max': 8,
    'asymptotics': False,
}

SECTIONS = ('oracles', 'closed_forms', 'schur', 'generating_functions', 'coefficients',
            'limits', 'q_series', 'pearson', 'operators', 'classical', 'hermite_measure',
            'asymptotics')

ASYMPTOTIC_DEFAULTS = {
    'k_max': 3,
    'lambdas': (0.5, 1.0, 2.0),
    'n_values': (50, 100, 200, 400),
    'precision_digits': 60,
    'condition_limit': 1e12,
    'quad_tolerance': 1e-8,
    'odd_term_ratio': 1e-4,
}

OUTPUT_DIR_ENV = 'QMOMENTS_OUTPUT_DIR'


def output_dir(override=None):
    '''
    Resolves where reports are written: an explicit value wins over the
    environment variable; ``None`` means standard output.
    '''
    if override:
        return override
    return os.environ.get(OUTPUT_DIR_ENV) or None


def check_ensemble(name, allowed=ENSEMBLES):
    '''
    Validates an ensemble identifier.

    :raises ConfigError: if the identifier is unknown.
    '''
    if name not in allowed:
        raise ConfigError('Unknown ensemble \'{0}\'; expected one of {1}'.format(
            name, ', '.join(allowed)))
    return name


def check_range(name, value, minimum=0):
    '''
    Validates that a range bound is an integer no smaller than ``minimum``.

    :raises ConfigError: if the range would be empty.
    '''
    if int(value) != value or value < minimum:
        raise ConfigError('{0} must be an integer >= {1}, got {2}'.format(
            name, minimum, value))
    return int(value)
