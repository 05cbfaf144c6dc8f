'''
Command line front end: moment tables, single Schur averages, generating
functions, coefficient expansions, the identity audit, operator checks,
large ``N`` probes and the ``q -> 1`` limits.

Exit codes: ``0`` success, ``1`` configuration or input error, ``2`` an
audit mismatch or a failed check, ``3`` disagreeing oracle routes.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import argparse
import logging
import math
import sys
from fractions import Fraction
from qmoments import __version__
from qmoments import asymptotics
from qmoments import suite
from qmoments.audit import compare, compare_series, IdentityCheck
from qmoments.data import FORMAT_CSV, FORMAT_JSON, FORMAT_PLOT, FORMATS
from qmoments.data import csvutils, jsonutils, plotdata
from qmoments.ensembles import as_partition
from qmoments.ensembles import weights
from qmoments.ensembles.coefficients import coefficient_expansion
from qmoments.ensembles.density import MomentTable, moment_table
from qmoments.ensembles.genfunc import generating_function
from qmoments.ensembles.recurrence import recurrence_search
from qmoments.ensembles.schur import schur_average_closed, schur_average_oracle
from qmoments.exact_algebra import RatFuncQ
from qmoments.q_operators import classical
from qmoments.q_operators.laplace import verify_annihilation
from qmoments.settings import (ASYMPTOTIC_DEFAULTS, AUDIT_DEFAULTS, ENSEMBLES, RUN_DEFAULTS,
                               SECTIONS, check_ensemble, check_range, output_dir)
from qmoments.util import ConfigError, OracleDisagreementError, QMomentsError


logger = logging.getLogger(__name__)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

MINIMUM_ORDER = 8


class ArgumentParser(argparse.ArgumentParser):

    '''
    Reports argument errors as :class:`ConfigError` so that they map onto
    exit code ``1``.
    '''

    def error(self, message):
        raise ConfigError('{0}: {1}'.format(self.prog, message))


def parse_q(text):
    '''
    Parses an exact rational ``0 < q < 1`` such as ``1/2``.

    :raises ConfigError: otherwise.
    '''
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError('q must be an exact rational such as 1/2, got \'{0}\''.format(text))
    if not 0 < value < 1:
        raise ConfigError('q must satisfy 0 < q < 1, got {0}'.format(value))
    return value


def _exact_sqrt(value):
    numer, denom = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if numer * numer != value.numerator or denom * denom != value.denominator:
        raise ConfigError('Stieltjes-Wigert values are functions of s = sqrt(q); '
                          'q = {0} is not a rational square'.format(value))
    return Fraction(numer, denom)


def evaluate(value, q):
    '''
    ``value`` at the rational ``q`` (at ``s = sqrt(q)`` for functions of
    ``s``); values without ``q`` are returned unchanged.
    '''
    if q is None or not isinstance(value, RatFuncQ):
        return value
    if value.var == 's':
        return value.eval(_exact_sqrt(q))
    return value.eval(q)


def _range(args, single, maximum, minimum):
    value = getattr(args, single)
    if value is not None:
        check_range(single, value, minimum)
        return [value]
    top = check_range(maximum, getattr(args, maximum), minimum)
    return list(range(minimum, top + 1))


def _check_order(order):
    if order < MINIMUM_ORDER:
        raise ConfigError('order must be >= {0}, got {1}'.format(MINIMUM_ORDER, order))
    return order


def _weight(args):
    return weights.weight_by_name(args.ensemble, args.alpha, getattr(args, 'beta', 0))


def _status(passed):
    return suite.EXIT_OK if passed else suite.EXIT_MISMATCH


def command_moments(args):
    '''
    Closed form moment table checked against both oracle routes.
    '''
    weight = _weight(args)
    q = parse_q(args.q) if args.q is not None else None
    if q is not None and not weight.is_q:
        raise ConfigError('--q applies to the q-ensembles only')
    ks = _range(args, 'k', 'kmax', 1)
    ns = _range(args, 'n', 'nmax', 1)
    closed = moment_table(weight, ks, ns, 'closed_form', args.workers)
    oracle = None if args.skip_oracle else moment_table(weight, ks, ns, 'oracle', args.workers)
    evaluated = MomentTable(weight)
    rows = []
    passed = True
    for k, n, value in closed.rows():
        row = {'k': k, 'N': n, 'value': evaluate(value, q)}
        if oracle is not None:
            row['oracle_agrees'] = oracle[(k, n)] == value
            passed = passed and row['oracle_agrees']
        evaluated.add(k, n, row['value'], closed.provenance[(k, n)])
        rows.append(row)
    data = {'command': 'moments', 'ensemble': weight.name, 'alpha': weight.alpha,
            'q': str(q) if q is not None else None, 'entries': rows}
    return data, _status(passed), [evaluated]


def command_schur(args):
    weight = _weight(args)
    kappa = as_partition(int(part) for part in args.partition.split(',') if part.strip())
    n = check_range('n', args.n, 1)
    closed = schur_average_closed(weight, kappa, n)
    oracle = schur_average_oracle(weight, kappa, n)
    entry = compare('schur_closed_form', closed, oracle, weight.name, kappa=str(kappa), N=n)
    data = {'command': 'schur', 'ensemble': weight.name, 'partition': str(kappa), 'N': n,
            'closed': closed, 'oracle': oracle, 'audit': entry.as_dict()}
    return data, _status(not entry.is_mismatch), None


def command_genfunc(args):
    weight = _weight(args)
    k = check_range('k', args.k, 1)
    direct, product = generating_function(weight, k, check_range('nmax', args.nmax, 1),
                                          args.route)
    entry = compare_series('generating_function_product', product, direct, weight.name, k=k)
    data = {'command': 'genfunc', 'ensemble': weight.name, 'k': k,
            'direct': list(direct.coeffs), 'product': list(product.coeffs),
            'audit': entry.as_dict()}
    return data, _status(not entry.is_mismatch), None


def command_coeffs(args):
    weight = _weight(args)
    k = check_range('k', args.k, 1)
    extracted, printed = coefficient_expansion(weight, k, args.source)
    entries = [compare('expansion_coefficient', value, truth, weight.name, k=k, index=index)
               for index, (value, truth) in enumerate(zip(printed, extracted))]
    data = {'command': 'coeffs', 'ensemble': weight.name, 'k': k,
            'extracted': extracted, 'printed': printed,
            'audit': [entry.as_dict() for entry in entries]}
    return data, _status(not any(entry.is_mismatch for entry in entries)), None


def command_verify(args):
    '''
    The full identity audit.
    '''
    overrides = {'k_max': args.kmax, 'n_max': args.nmax, 'asymptotics': args.asymptotics}
    if args.alpha is not None:
        overrides['lql_alphas'] = tuple(args.alpha)
    report = suite.run_suite(args.ensemble, args.section, args.workers, **overrides)
    return report.as_dict(), suite.exit_status(report), None


def command_qde(args):
    weight = _weight(args)
    if not weight.is_q or weight.name == weights.STIELTJES_WIGERT:
        raise ConfigError('qde needs the dqh or lql ensemble, got {0}'.format(args.ensemble))
    result = verify_annihilation(weight, check_range('n', args.n, 0), _check_order(args.order))
    data = {'command': 'qde', 'result': result.as_dict()}
    return data, _status(result.passed), None


def command_ode(args):
    weight = _weight(args)
    n = check_range('n', args.n, 0)
    result = classical.classical_ode_check(weight, n, _check_order(args.order))
    entry = classical.display_audit(weight, n)
    data = {'command': 'ode', 'result': result.as_dict(), 'display': entry.as_dict()}
    return data, _status(result.passed and not entry.is_mismatch), None


def command_asymptotics(args):
    '''
    Scaling probes against the closed leading terms, or limiting density
    samples with ``--format plot-data``.
    '''
    lambdas = args.lam or list(ASYMPTOTIC_DEFAULTS['lambdas'])
    if args.format == FORMAT_PLOT:
        if len(lambdas) != 1:
            raise ConfigError('plot-data output needs exactly one --lambda')
        return None, suite.EXIT_OK, asymptotics.density_plot_data(lambdas[0], args.points)
    check_ensemble(args.ensemble, asymptotics.PROBE_ENSEMBLES)
    ks = _range(args, 'k', 'kmax', 1)
    n_values = args.n_values or list(ASYMPTOTIC_DEFAULTS['n_values'])
    cases = [(args.ensemble, k, lam) for k in ks for lam in lambdas]
    results = asymptotics.probe_checks(cases, n_values, args.workers)
    limits = []
    for k in ks:
        for lam in lambdas:
            limits.extend(asymptotics.coefficient_limit_check(args.ensemble, k, lam, n_values))
    data = {'command': 'asymptotics', 'ensemble': args.ensemble,
            'results': [result.as_dict() for result in results],
            'coefficients': [result.as_dict() for result in limits]}
    checked = results + limits
    if args.ensemble == 'sw':
        density = [asymptotics.limiting_density_check(k, lam) for k in ks for lam in lambdas]
        data['density'] = [result.as_dict() for result in density]
        checked = checked + density
    else:
        data['x_convention'] = [dict(asymptotics.x_convention_check(k, lam, n_values), k=k,
                                     **{'lambda': lam}) for k in ks for lam in lambdas]
    return data, _status(all(result.passed for result in checked)), results


def command_limits(args):
    '''
    The ``q -> 1`` limit checks together with the recurrence search in the
    classical ensembles.
    '''
    overrides = {'k_max': args.kmax, 'n_max': args.nmax}
    if args.alpha is not None:
        overrides['lql_alphas'] = tuple(args.alpha)
    report = suite.run_suite(None, ['limits'], None, **overrides)
    data = report.as_dict()
    found = {}
    for name in (weights.GAUSSIAN, weights.LAGUERRE):
        recurrence = recurrence_search(weights.weight_by_name(name))
        found[name] = str(recurrence) if recurrence is not None else None
    data['recurrences'] = found
    return data, suite.exit_status(report), None


COMMANDS = {
    'moments': command_moments,
    'schur': command_schur,
    'genfunc': command_genfunc,
    'coeffs': command_coeffs,
    'verify': command_verify,
    'qde': command_qde,
    'ode': command_ode,
    'asymptotics': command_asymptotics,
    'limits': command_limits,
}

CSV_COMMANDS = ('moments', 'asymptotics')


def _add_common(parser):
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log INFO (-v) or DEBUG (-vv) messages to stderr')
    parser.add_argument('-o', '--output', default=None,
                        help='Output file or directory (default: $QMOMENTS_OUTPUT_DIR or stdout)')
    parser.add_argument('--format', choices=FORMATS, default=FORMAT_JSON)
    parser.add_argument('--workers', type=int, default=None,
                        help='Worker processes for independent cells')


def _add_weight(parser, choices, required=True):
    parser.add_argument('--ensemble', choices=choices, required=required)
    parser.add_argument('--alpha', type=int, default=RUN_DEFAULTS['alpha'])


def build_parser():
    parser = ArgumentParser(prog='qmoments', description=__doc__.split('\n\n')[0])
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', required=True)

    moments = commands.add_parser('moments', help='Moment tables by closed form and oracles')
    _add_common(moments)
    _add_weight(moments, ENSEMBLES)
    moments.add_argument('--k', type=int)
    moments.add_argument('--n', type=int)
    moments.add_argument('--kmax', type=int, default=RUN_DEFAULTS['k_max'])
    moments.add_argument('--nmax', type=int, default=RUN_DEFAULTS['n_max'])
    moments.add_argument('--q', help='Evaluate at an exact rational 0 < q < 1')
    moments.add_argument('--skip-oracle', action='store_true')

    schur = commands.add_parser('schur', help='A single Schur average')
    _add_common(schur)
    _add_weight(schur, ENSEMBLES)
    schur.add_argument('--partition', required=True, help='Parts separated by commas')
    schur.add_argument('--n', type=int, required=True)

    genfunc = commands.add_parser('genfunc', help='Generating function in N')
    _add_common(genfunc)
    _add_weight(genfunc, ('sw', 'dqh', 'gaussian'))
    genfunc.add_argument('--k', type=int, required=True)
    genfunc.add_argument('--nmax', type=int, default=AUDIT_DEFAULTS['genfunc_n_max'])
    genfunc.add_argument('--route', choices=('schur_sum', 'cd_sum'), default=RUN_DEFAULTS['route'])

    coeffs = commands.add_parser('coeffs', help='Expansion coefficients in q^(pN)')
    _add_common(coeffs)
    _add_weight(coeffs, ('sw', 'dqh'))
    coeffs.add_argument('--k', type=int, required=True)
    coeffs.add_argument('--source', choices=('closed_form', 'oracle'), default='oracle')

    verify = commands.add_parser('verify', help='The full identity audit')
    _add_common(verify)
    verify.add_argument('--ensemble', choices=ENSEMBLES, action='append')
    verify.add_argument('--alpha', type=int, action='append')
    verify.add_argument('--kmax', type=int, default=AUDIT_DEFAULTS['k_max'])
    verify.add_argument('--nmax', type=int, default=AUDIT_DEFAULTS['n_max'])
    verify.add_argument('--section', choices=SECTIONS, action='append')
    verify.add_argument('--asymptotics', action='store_true',
                        help='Include the floating point large N checks')

    qde = commands.add_parser('qde', help='Fourth order q-difference equation')
    _add_common(qde)
    _add_weight(qde, ('dqh', 'lql'))
    qde.add_argument('--n', type=int, required=True)
    qde.add_argument('--order', type=int, default=AUDIT_DEFAULTS['operator_order'])

    ode = commands.add_parser('ode', help='Classical Laplace transform equations')
    _add_common(ode)
    _add_weight(ode, ('gaussian', 'laguerre', 'jacobi'))
    ode.add_argument('--beta', type=int, default=0)
    ode.add_argument('--n', type=int, required=True)
    ode.add_argument('--order', type=int, default=30)

    probes = commands.add_parser('asymptotics', help='Large N probes at q = exp(-lambda/N)')
    _add_common(probes)
    probes.add_argument('--ensemble', choices=asymptotics.PROBE_ENSEMBLES, default='sw')
    probes.add_argument('--k', type=int)
    probes.add_argument('--kmax', type=int, default=ASYMPTOTIC_DEFAULTS['k_max'])
    probes.add_argument('--lambda', dest='lam', type=float, action='append')
    probes.add_argument('--n-values', type=int, nargs='+')
    probes.add_argument('--points', type=int, default=200)

    limits = commands.add_parser('limits', help='q -> 1 limits and classical recurrences')
    _add_common(limits)
    limits.add_argument('--alpha', type=int, action='append')
    limits.add_argument('--kmax', type=int, default=AUDIT_DEFAULTS['k_max'])
    limits.add_argument('--nmax', type=int, default=AUDIT_DEFAULTS['n_max'])
    return parser


def configure_logging(verbosity):
    '''
    Root logger on stderr so that results written to stdout stay parseable.
    '''
    level = LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def write_output(args, data, extra):
    '''
    Writes a command result in the requested format to a file, a directory
    (default file name) or stdout.
    '''
    target = output_dir(args.output)
    if args.format == FORMAT_JSON:
        if target:
            logger.info('wrote %s', jsonutils.output_json(target, data))
        else:
            sys.stdout.write(jsonutils.dumps(data) + '\n')
    elif args.format == FORMAT_CSV:
        if args.command not in CSV_COMMANDS:
            raise ConfigError('csv output is available for {0} only'.format(
                ', '.join(CSV_COMMANDS)))
        if args.command == 'moments':
            header, rows = csvutils.MOMENT_HEADER, list(csvutils.moment_rows(extra))
            writer = csvutils.output_moment_table_csv
        else:
            header, rows = csvutils.PROBE_HEADER, list(csvutils.probe_rows(extra))
            writer = csvutils.output_probe_csv
        if target:
            logger.info('wrote %s', writer(target, extra))
        else:
            csvutils.write_rows(sys.stdout, header, rows)
    else:
        if args.command != 'asymptotics':
            raise ConfigError('plot-data output is available for asymptotics only')
        if target:
            logger.info('wrote %s', plotdata.output_plot_data(target, extra))
        else:
            sys.stdout.write(plotdata.format_plot_data(extra))


def run(argv=None):
    '''
    Parses ``argv`` and runs one command.

    :returns: The exit status.
    '''
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    if args.workers is not None and args.workers < 1:
        raise ConfigError('--workers must be >= 1, got {0}'.format(args.workers))
    data, status, extra = COMMANDS[args.command](args)
    write_output(args, data, extra)
    logger.info('%s finished with status %d', args.command, status)
    return status


def main(argv=None):
    '''
    Console entry point: maps errors onto exit codes.
    '''
    try:
        return run(argv)
    except OracleDisagreementError as error:
        sys.stderr.write('error: {0}\n'.format(error))
        return suite.EXIT_ORACLE
    except QMomentsError as error:
        sys.stderr.write('error: {0}\n'.format(error))
        return suite.EXIT_CONFIG
