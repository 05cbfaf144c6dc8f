'''
The identity audit: every closed form, generating function, coefficient
expansion, limit and operator identity checked against its oracle and
collected into one :class:`qmoments.audit.AuditReport`.

Checks are grouped into sections (see :data:`qmoments.settings.SECTIONS`)
that run independently; with ``workers > 1`` each section runs in its own
process and the report is assembled in section order afterwards.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from qmoments import asymptotics
from qmoments import hermite_measure
from qmoments.audit import (AuditEntry, AuditReport, IdentityCheck, compare, compare_series,
                            EXACT, MISMATCH)
from qmoments.ensembles import Partition
from qmoments.ensembles import weights
from qmoments.ensembles.coefficients import (dqh_expansion_coefficients, dqh_printed_coefficients,
                                             lql_expansion_coefficients, sw_expansion_coefficients,
                                             sw_printed_coefficients)
from qmoments.ensembles.density import (density_moment_closed, density_moment_oracle,
                                        dqh_second_moment, gaussian_moment_2f1,
                                        gaussian_moment_gamma, gaussian_moment_lsum_printed,
                                        gaussian_moment_rsum_printed, laguerre_moment_3f2,
                                        laguerre_moment_limit, sw_moment_binomial,
                                        sw_moment_binomial_inverse, sw_unscale)
from qmoments.ensembles.genfunc import generating_function
from qmoments.ensembles.limits import (dqh_moment_limit, dqh_schur_limit, genus_coefficients,
                                       leading_coefficient, lql_moment_limit, lql_schur_limit)
from qmoments.ensembles.recurrence import (gaussian_recurrence_residual,
                                           laguerre_recurrence_residual)
from qmoments.ensembles.schur import dqh_schur_hook, schur_average_closed, schur_average_oracle
from qmoments.exact_algebra import XPoly, Q, S
from qmoments.q_operators import classical
from qmoments.q_operators.laplace import (annihilation_checks, combine, dqh_display_operators,
                                          dqh_phi0_closed_form, fourth_order_operator,
                                          intermediate_identities, leibniz_holds,
                                          lift_product_rule_holds, series_from_measure)
from qmoments.q_operators.pearson import pearson_verify
from qmoments.q_operators.series import FormalSeries
from qmoments.q_special import (pochhammer_split_holds, qbinomial_generating_series,
                                qbinomial_inversion_holds, qpochhammer, reversed_qfactorial)
from qmoments.settings import AUDIT_DEFAULTS, ENSEMBLES, SECTIONS, check_ensemble
from qmoments.util import ConfigError, ExpansionError
from qmoments.util.math import catalan


logger = logging.getLogger(__name__)

ORACLE_IDENTITY = 'oracle_concordance'

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_MISMATCH = 2
EXIT_ORACLE = 3

NOTES = {
    'sw_schur': 'product form is in the rescaled variable; compared after multiplying by '
                'q^(-(N-1/2)|kappa|)',
    'gaussian_schur': 'product form is normalised for exp(-x^2/2); compared after '
                      'multiplying by 2^(-|kappa|/2)',
    'gaussian_printed': 'printed form is normalised for exp(-x^2/2); compared after dividing '
                        'by 2^k',
    'sw_genfunc': 'product form is in the rescaled variable',
    'gaussian_genfunc': 'product form is normalised for exp(-x^2/2)',
    'sw_coefficient': 'extracted from q^(2Nk) m_(k,N) in the lattice variable',
    'sw_antisymmetry': 'checked on q^(-k/2) times the extracted coefficients, the partial '
                       'fraction coefficients of the product form; the printed b_s carry an '
                       'extra q^s',
    'dqh_coefficient': 'extracted from q^k m_(2k,N)',
    'coefficient_source': 'moments taken from the closed form, itself audited against the '
                          'oracles',
    'gaussian_recurrence': 'middle term carries a factor N',
    'genus': 'expansion in N^(k+1-2g); N^(1+2k) as displayed counts the degree of '
             '2^k m_(2k,N) N^k',
    'display': 'resolvent term at lambda^3 taken as +R_1 D_q/(1-q); the display is then '
               '-1 times the assembled operator',
    'numeric': 'floating point agreement within relative tolerance {0:g}',
    'x_convention': 'displayed leading term matches the extrapolated probes with x = {0}',
    'x_convention_none': 'displayed leading term evaluated with x = e^lambda and x = e^-lambda; '
                         'neither matches the extrapolated probes, which agree with the sum of '
                         'the coefficient limits (scaled_moment_leading_term)',
}


def audit_settings(overrides=None):
    '''
    :data:`AUDIT_DEFAULTS` with the non-``None`` overrides applied.
    '''
    values = dict(AUDIT_DEFAULTS)
    values.update(dict((key, value) for key, value in (overrides or {}).items()
                       if value is not None))
    return values


def _selected(ensembles, *names):
    return ensembles is None or any(name in ensembles for name in names)


def _q_weights(config, ensembles):
    '''
    The q-weights under audit; one little q-Laguerre weight per alpha.
    '''
    result = []
    if _selected(ensembles, 'sw'):
        result.append(weights.stieltjes_wigert())
    if _selected(ensembles, 'dqh'):
        result.append(weights.discrete_q_hermite())
    if _selected(ensembles, 'lql'):
        result.extend(weights.little_q_laguerre(alpha) for alpha in config['lql_alphas'])
    return result


def _classical_weights(config, ensembles):
    result = []
    if _selected(ensembles, 'gaussian'):
        result.append(weights.gaussian())
    if _selected(ensembles, 'laguerre'):
        result.extend(weights.laguerre(alpha) for alpha in config['lql_alphas'])
    return result


def _cell(weight, **cell):
    if weight.alpha is not None:
        cell['alpha'] = weight.alpha
    return cell


def _grid(config):
    for k in range(1, config['k_max'] + 1):
        for n in range(1, config['n_max'] + 1):
            yield k, n


def oracle_section(config, ensembles=None):
    '''
    Both oracle routes on every ``(k, N)`` cell.
    '''
    entries = []
    groups = {}
    for weight in _q_weights(config, ensembles) + _classical_weights(config, ensembles):
        if weight.name not in groups:
            groups[weight.name] = IdentityCheck(ORACLE_IDENTITY, weight.name)
        check = groups[weight.name]
        for k, n in _grid(config):
            check.check(density_moment_oracle(weight, k, n, 'schur_sum'),
                        density_moment_oracle(weight, k, n, 'cd_sum'), **_cell(weight, k=k, N=n))
    for check in groups.values():
        entries.append(check.entry())
    return entries


def closed_form_section(config, ensembles=None):
    '''
    Closed density moments and the alternative printed forms against the
    oracle.
    '''
    groups = {}
    extra = []
    for weight in _q_weights(config, ensembles) + _classical_weights(config, ensembles):
        if weight.name not in groups:
            groups[weight.name] = IdentityCheck('density_closed_form', weight.name)
        check = groups[weight.name]
        for k, n in _grid(config):
            check.check(density_moment_closed(weight, k, n),
                        density_moment_oracle(weight, k, n), **_cell(weight, k=k, N=n))
    entries = [check.entry() for check in groups.values()]
    if _selected(ensembles, 'sw'):
        weight = weights.stieltjes_wigert()
        inverse = IdentityCheck('sw_binomial_inverse_form', weight.name)
        direct = IdentityCheck('sw_binomial_form', weight.name)
        agree = IdentityCheck('sw_binomial_forms_agree', weight.name)
        for k, n in _grid(config):
            oracle = density_moment_oracle(weight, k, n)
            first, second = sw_moment_binomial_inverse(k, n), sw_moment_binomial(k, n)
            inverse.check(sw_unscale(first, k, n), oracle, k=k, N=n)
            direct.check(sw_unscale(second, k, n), oracle, k=k, N=n)
            agree.check(first, second, k=k, N=n)
        extra.extend([inverse.entry(), direct.entry(), agree.entry()])
    if _selected(ensembles, 'dqh'):
        weight = weights.discrete_q_hermite()
        check = IdentityCheck('dqh_second_moment', weight.name)
        for n in range(1, config['n_max'] + 1):
            check.check(dqh_second_moment(n), density_moment_oracle(weight, 2, n), N=n)
        extra.append(check.entry())
    if _selected(ensembles, 'gaussian'):
        weight = weights.gaussian()
        gamma = IdentityCheck('gaussian_moment_gamma', weight.name)
        rsum = IdentityCheck('gaussian_moment_rsum', weight.name, NOTES['gaussian_printed'])
        lsum = IdentityCheck('gaussian_moment_lsum', weight.name, NOTES['gaussian_printed'])
        for k, n in _grid(config):
            oracle = density_moment_oracle(weight, 2 * k, n)
            scale = Fraction(1, 2 ** k)
            gamma.check(gaussian_moment_gamma(k, n), oracle, k=k, N=n)
            rsum.check(gaussian_moment_rsum_printed(k, n) * scale, oracle, k=k, N=n)
            lsum.check(gaussian_moment_lsum_printed(k, n) * scale, oracle, k=k, N=n)
        extra.extend([gamma.entry(), rsum.entry(), lsum.entry()])
    if _selected(ensembles, 'laguerre'):
        check = IdentityCheck('laguerre_moment_limit_form', weights.LAGUERRE)
        for alpha in config['lql_alphas']:
            weight = weights.laguerre(alpha)
            for k, n in _grid(config):
                check.check(laguerre_moment_limit(k, n, alpha), density_moment_oracle(weight, k, n),
                            k=k, N=n, alpha=alpha)
        extra.append(check.entry())
    return entries + extra


def _partitions(config, n):
    for size in range(config['schur_max_size'] + 1):
        for kappa in Partition.of_size(size, max_length=n):
            yield kappa


def schur_section(config, ensembles=None):
    '''
    Closed Schur averages (parity vanishing included), the hook form and the
    ``q -> 1`` limits of the averages.
    '''
    notes = {weights.STIELTJES_WIGERT: NOTES['sw_schur'],
             weights.GAUSSIAN: NOTES['gaussian_schur']}
    groups = {}
    for weight in _q_weights(config, ensembles) + _classical_weights(config, ensembles):
        if weight.name not in groups:
            groups[weight.name] = IdentityCheck('schur_closed_form', weight.name,
                                                notes.get(weight.name))
        check = groups[weight.name]
        for n in range(1, config['n_max'] + 1):
            for kappa in _partitions(config, n):
                check.check(schur_average_closed(weight, kappa, n),
                            schur_average_oracle(weight, kappa, n),
                            **_cell(weight, kappa=str(kappa), N=n))
    entries = [check.entry() for check in groups.values()]
    if _selected(ensembles, 'dqh'):
        weight = weights.discrete_q_hermite()
        gaussian = weights.gaussian()
        hook = IdentityCheck('dqh_schur_hook', weight.name)
        limit = IdentityCheck('dqh_schur_limit', weight.name)
        for n in range(1, config['n_max'] + 1):
            for k in range(1, config['schur_max_size'] // 2 + 1):
                for r in range(2 * k):
                    hook.check(dqh_schur_hook(k, r, n),
                               schur_average_oracle(weight, Partition.hook(2 * k - r, r), n),
                               k=k, r=r, N=n)
            for kappa in _partitions(config, n):
                limit.check(dqh_schur_limit(kappa, n), schur_average_oracle(gaussian, kappa, n),
                            kappa=str(kappa), N=n)
        entries.extend([hook.entry(), limit.entry()])
    if _selected(ensembles, 'lql'):
        limit = IdentityCheck('lql_schur_limit', weights.LITTLE_Q_LAGUERRE)
        for alpha in config['lql_alphas']:
            laguerre = weights.laguerre(alpha)
            for n in range(1, config['n_max'] + 1):
                for kappa in _partitions(config, n):
                    limit.check(lql_schur_limit(kappa, n, alpha),
                                schur_average_oracle(laguerre, kappa, n),
                                kappa=str(kappa), N=n, alpha=alpha)
        entries.append(limit.entry())
    return entries


def generating_function_section(config, ensembles=None):
    '''
    Product forms in ``z`` against the direct series; one entry per ``k``
    since the conventions factor depends on ``k``.
    '''
    entries = []
    builders = (('sw', weights.stieltjes_wigert, NOTES['sw_genfunc']),
                ('dqh', weights.discrete_q_hermite, None),
                ('gaussian', weights.gaussian, NOTES['gaussian_genfunc']))
    for short, builder, note in builders:
        if not _selected(ensembles, short):
            continue
        weight = builder()
        for k in range(1, config['k_max'] + 1):
            direct, product = generating_function(weight, k, config['genfunc_n_max'], 'cd_sum')
            entries.append(compare_series('generating_function_product', product, direct,
                                          weight.name, note, k=k))
    return entries


def _inverted(value):
    return value.subs_inverse() if hasattr(value, 'subs_inverse') else value


def coefficient_section(config, ensembles=None):
    '''
    Printed expansion coefficients against the Vandermonde extraction, one
    entry per coefficient, with the antisymmetry under ``q -> 1/q``.
    '''
    entries = []
    source = config['coefficient_source']
    if _selected(ensembles, 'dqh'):
        odd = IdentityCheck('dqh_coefficient_antisymmetry', weights.DISCRETE_Q_HERMITE)
        for k in range(1, config['k_max'] + 1):
            extracted = dqh_expansion_coefficients(k, source)
            printed = dqh_printed_coefficients(k)
            for p, (value, truth) in enumerate(zip(printed, extracted)):
                entries.append(compare('dqh_expansion_coefficient', value, truth,
                                       weights.DISCRETE_Q_HERMITE, NOTES['dqh_coefficient'],
                                       k=k, p=p))
                odd.check(_inverted(truth), -truth, k=k, p=p)
        entries.append(odd.entry())
    if _selected(ensembles, 'sw'):
        odd = IdentityCheck('sw_coefficient_antisymmetry', weights.STIELTJES_WIGERT,
                            NOTES['sw_antisymmetry'])
        for k in range(1, config['k_max'] + 1):
            extracted = sw_expansion_coefficients(k, source)
            printed = sw_printed_coefficients(k)
            for index, (value, truth) in enumerate(zip(printed, extracted)):
                entries.append(compare('sw_expansion_coefficient', value, truth,
                                       weights.STIELTJES_WIGERT, NOTES['sw_coefficient'],
                                       k=k, s=index))
                rescaled = truth * S ** (-k)
                odd.check(_inverted(rescaled), -rescaled, k=k, s=index)
        entries.append(odd.entry())
    if _selected(ensembles, 'lql'):
        shape = IdentityCheck('lql_expansion_shape', weights.LITTLE_Q_LAGUERRE)
        for k in range(1, config['k_max'] + 1):
            try:
                lql_expansion_coefficients(k, check=True)
                shape.record(True, k=k)
            except ExpansionError as error:
                shape.record(False, str(error), k=k)
        entries.append(shape.entry())
    return entries


def limit_section(config, ensembles=None):
    '''
    ``q -> 1`` limits of the moments, the classical recurrences and the
    large ``N`` leading coefficient.
    '''
    entries = []
    if _selected(ensembles, 'dqh', 'gaussian'):
        limit = IdentityCheck('gaussian_from_dqh', weights.GAUSSIAN)
        recurrence = IdentityCheck('gaussian_recurrence', weights.GAUSSIAN,
                                   NOTES['gaussian_recurrence'])
        leading = IdentityCheck('catalan_leading_coefficient', weights.GAUSSIAN)
        genus = IdentityCheck('genus_expansion_parity', weights.GAUSSIAN, NOTES['genus'])
        for k, n in _grid(config):
            limit.check(dqh_moment_limit(k, n), gaussian_moment_2f1(k, n), k=k, N=n)
            if k >= 2:
                recurrence.check(gaussian_recurrence_residual(k, n), 0, k=k, N=n)
        for k in range(1, config['k_max'] + 1):
            leading.check(leading_coefficient(k), Fraction(catalan(k)), k=k)
            _, residual = genus_coefficients(k)
            genus.record(not residual, residual, k=k)
        entries.extend([limit.entry(), recurrence.entry(), leading.entry(), genus.entry()])
    if _selected(ensembles, 'lql', 'laguerre'):
        limit = IdentityCheck('laguerre_from_lql', weights.LAGUERRE)
        recurrence = IdentityCheck('laguerre_recurrence', weights.LAGUERRE)
        for alpha in config['lql_alphas']:
            for k, n in _grid(config):
                limit.check(lql_moment_limit(k, n, alpha), laguerre_moment_3f2(k, n, alpha),
                            k=k, N=n, alpha=alpha)
                recurrence.check(laguerre_recurrence_residual(k, n, alpha), 0, k=k, N=n,
                                 alpha=alpha)
        entries.extend([limit.entry(), recurrence.entry()])
    return entries


def q_series_section(config, ensembles=None):
    '''
    The q-binomial and q-Pochhammer identities the closed forms rest on.
    '''
    top = config['q_series_max']
    inversion = IdentityCheck('qbinomial_inversion')
    split = IdentityCheck('qpochhammer_split')
    reversal = IdentityCheck('qfactorial_reversal')
    for n in range(top + 1):
        for l in range(n + 1):
            inversion.record(qbinomial_inversion_holds(n, l), n=n, l=l)
            split.record(pochhammer_split_holds(Q ** (l + 1), l, n - l), m=l, n=n - l)
            reversal.check(reversed_qfactorial(n, l), qpochhammer(Q, n - l, Q), m=n, r=l)
    entries = [inversion.entry(), split.entry(), reversal.entry()]
    for k in range(4):
        direct, product = qbinomial_generating_series(k, top + 1)
        entries.append(compare_series('qbinomial_generating_function', product, direct, k=k))
    return entries


def pearson_section(config, ensembles=None):
    '''
    Ratio identity and the integration by parts identities of the Pearson
    pair.
    '''
    checks = {}
    for weight in _q_weights(config, ensembles):
        if weight.name == weights.STIELTJES_WIGERT:
            continue
        if weight.name not in checks:
            checks[weight.name] = IdentityCheck('pearson_pair', weight.name)
        result = pearson_verify(weight, config['pearson_degree'])
        checks[weight.name].record(result.passed, result.failure,
                                   **_cell(weight, checked=result.checked))
    return [check.entry() for check in checks.values()]


def _probe_series(order):
    return FormalSeries([Q ** 0 * Fraction(k * k + 1, k + 2) for k in range(order)], order)


def operator_section(config, ensembles=None, workers=None):
    '''
    Annihilation by the fourth order operator, the displayed ``N = 0``
    equation, the transform of the weight and the rules the operator is
    built from.
    '''
    order = config['operator_order']
    cases = []
    if _selected(ensembles, 'dqh'):
        cases.extend((weights.DISCRETE_Q_HERMITE, None, n)
                     for n in range(config['operator_n_max'] + 1))
    if _selected(ensembles, 'lql'):
        cases.extend((weights.LITTLE_Q_LAGUERRE, alpha, n)
                     for alpha in config['lql_alphas'] for n in config['lql_operator_n'])
    entries = []
    checks = {}
    for result in annihilation_checks(cases, order, workers):
        if result.weight not in checks:
            checks[result.weight] = IdentityCheck('fourth_order_annihilation', result.weight)
        cell = {'N': result.n, 'order': result.order}
        if result.alpha is not None:
            cell['alpha'] = result.alpha
        checks[result.weight].record(result.passed, result.as_dict().get('failure'), **cell)
    entries.extend(check.entry() for check in checks.values())
    if _selected(ensembles, 'dqh'):
        weight = weights.discrete_q_hermite()
        probe = _probe_series(order)
        display = combine(dqh_display_operators(Q, corrected=True))(probe)
        assembled = fourth_order_operator(weight, 0)(probe)
        entries.append(compare_series('dqh_fourth_order_display', display, assembled,
                                      weight.name, NOTES['display'], N=0))
        entries.append(compare_series('dqh_transform_closed_form', dqh_phi0_closed_form(Q, order),
                                      series_from_measure(weight, None, order), weight.name, N=0))
        relations = IdentityCheck('transform_relations', weight.name)
        for n in range(config['operator_n_max'] + 1):
            for name, (left, right) in sorted(intermediate_identities(weight, n, order).items()):
                for index in range(min(left.order, right.order)):
                    relations.check(left[index], right[index], N=n, relation=name, index=index)
        entries.append(relations.entry())
        leibniz = IdentityCheck('q_leibniz_rule')
        product = IdentityCheck('lift_product_rule', weight.name)
        for n in range(1, 5):
            leibniz.record(leibniz_holds(probe, n, Q), n=n)
        for m in range(4):
            product.record(lift_product_rule_holds(weight.sigma, m, probe, Q), m=m)
        entries.extend([leibniz.entry(), product.entry()])
    return entries


def classical_section(config, ensembles=None):
    '''
    Assembled classical Laplace transform equations and the displays they
    are compared with.
    '''
    order = config['classical_order']
    cases = []
    if _selected(ensembles, 'gaussian'):
        cases.extend((weights.gaussian(), n) for n in range(config['classical_n_max'] + 1))
    if _selected(ensembles, 'laguerre'):
        cases.extend((weights.laguerre(alpha), n) for alpha in config['laguerre_alphas']
                     for n in range(config['classical_n_max'] + 1))
    if ensembles is None:
        cases.extend((weights.jacobi(a, b), n) for a, b in config['jacobi_parameters']
                     for n in range(config['jacobi_n_max'] + 1))
    checks = {}
    displays = []
    for weight, n in cases:
        if weight.name not in checks:
            checks[weight.name] = IdentityCheck('classical_annihilation', weight.name)
        result = classical.classical_ode_check(weight, n, order)
        cell = {'N': n, 'alpha': weight.alpha, 'beta': weight.beta}
        checks[weight.name].record(result.passed, result.as_dict().get('failure'), **cell)
        displays.append(classical.display_audit(weight, n))
    return [check.entry() for check in checks.values()] + displays


def hermite_measure_section(config, ensembles=None):
    '''
    Linearisation of dilated discrete q-Hermite polynomials and the moments
    of ``p_N^2 dmu / h_N`` built on it.
    '''
    if not _selected(ensembles, 'dqh'):
        return []
    n_max, k_max = config['linearisation_n_max'], config['linearisation_k_max']
    entries = [hermite_measure.linearisation_audit(n_max, k_max)]
    identity = IdentityCheck('dqh_linearisation_polynomial', weights.DISCRETE_Q_HERMITE)
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            identity.record(hermite_measure.linearisation_holds(n, k), n=n, k=k)
    shifted = IdentityCheck('dqh_shifted_moment', weights.DISCRETE_Q_HERMITE)
    squared = IdentityCheck('dqh_squared_moment_difference', weights.DISCRETE_Q_HERMITE)
    expansion = IdentityCheck('dqh_monomial_expansion', weights.DISCRETE_Q_HERMITE)
    for p in range(config['measure_p_max'] + 1):
        expansion.record(hermite_measure.monomial_expansion_holds(p), p=p)
        for n in range(config['n_max'] + 1):
            shifted.check(hermite_measure.shifted_moment_M(p, n),
                          hermite_measure.shifted_moment_oracle(p, n), k=p, N=n)
            if p >= 1:
                squared.check(hermite_measure.squared_moment(p, n),
                              hermite_measure.squared_moment_difference(p, n), p=p, N=n)
    dilation = IdentityCheck('dqh_dilation', weights.DISCRETE_Q_HERMITE)
    for power in range(7):
        dilation.record(hermite_measure.dilation_holds(XPoly([0] * power + [1])), power=power)
    paths = IdentityCheck('lattice_path_count')
    for k in range(k_max + 1):
        for l in range(k_max + 1):
            paths.check(hermite_measure.path_generating_function(k, l),
                        hermite_measure.path_closed_form(k, l), k=k, l=l)
    entries.extend([identity.entry(), shifted.entry(), squared.entry(), expansion.entry(),
                    dilation.entry(), paths.entry()])
    return entries


def _numeric_entry(identity, ensemble, results, tolerance):
    tested = []
    witness = None
    for result in results:
        cell = result.as_dict()
        tested.append(dict((key, cell[key]) for key in ('k', 'lambda', 'index') if key in cell))
        if witness is None and not result.passed:
            witness = {'cell': cell}
    status = EXACT if witness is None else MISMATCH
    return AuditEntry(identity, ensemble, status, witness=witness, tested=tested,
                      note=NOTES['numeric'].format(tolerance))


def display_convention_entry(probes):
    '''
    The displayed discrete q-Hermite leading term under both ``x``
    conventions, against the extrapolated probes.  The entry is exact only
    when one convention matches every cell.
    '''
    tested = []
    witness = None
    matched = set()
    for result in probes:
        errors = asymptotics.display_convention_errors(result.probe.k, result.probe.lam,
                                                       result.extrapolation.leading)
        convention = asymptotics.matching_convention(errors, result.tolerance)
        cell = {'k': result.probe.k, 'lambda': result.probe.lam}
        tested.append(cell)
        if convention is None:
            if witness is None:
                witness = {'cell': dict(cell, leading=result.extrapolation.leading,
                                        relative_error=errors)}
        else:
            matched.add(convention)
    if witness is None and len(matched) > 1:
        witness = {'conventions': sorted(matched)}
    if witness is not None:
        return AuditEntry('dqh_leading_term_display', weights.DISCRETE_Q_HERMITE, MISMATCH,
                          witness=witness, tested=tested, note=NOTES['x_convention_none'])
    note = NOTES['x_convention'].format(matched.pop() if matched else None)
    return AuditEntry('dqh_leading_term_display', weights.DISCRETE_Q_HERMITE, EXACT,
                      tested=tested, note=note)


def asymptotic_section(config, ensembles=None, workers=None):
    '''
    Floating point large ``N`` checks; included only when
    ``config['asymptotics']`` is set.
    '''
    if not config['asymptotics'] or not _selected(ensembles, 'sw', 'dqh'):
        return []
    results = asymptotics.asymptotic_suite(workers=workers)
    entries = []
    for short, name in (('sw', weights.STIELTJES_WIGERT), ('dqh', weights.DISCRETE_Q_HERMITE)):
        if not _selected(ensembles, short):
            continue
        probes = [result for result in results['probes'] if result.probe.ensemble == short]
        if probes:
            entries.append(_numeric_entry('scaled_moment_leading_term', name, probes,
                                          probes[0].tolerance))
            if short == 'dqh':
                entries.append(display_convention_entry(probes))
        limits = [result for result in results['coefficients'] if result.ensemble == short]
        if limits:
            entries.append(_numeric_entry('scaled_coefficient_limit', name, limits,
                                          limits[0].tolerance))
    if _selected(ensembles, 'sw'):
        density = results['density']
        entries.append(_numeric_entry('limiting_density_moments', weights.STIELTJES_WIGERT,
                                      density, density[0].tolerance))
    return entries


SECTION_RUNNERS = {
    'oracles': oracle_section,
    'closed_forms': closed_form_section,
    'schur': schur_section,
    'generating_functions': generating_function_section,
    'coefficients': coefficient_section,
    'limits': limit_section,
    'q_series': q_series_section,
    'pearson': pearson_section,
    'operators': operator_section,
    'classical': classical_section,
    'hermite_measure': hermite_measure_section,
    'asymptotics': asymptotic_section,
}

PARALLEL_SECTIONS = ('operators', 'asymptotics')


def run_section(name, config, ensembles=None, workers=None):
    '''
    Runs one section.

    :returns: List of :class:`AuditEntry`.
    '''
    if name not in SECTION_RUNNERS:
        raise ConfigError('Unknown audit section \'{0}\'; expected one of {1}'.format(
            name, ', '.join(SECTIONS)))
    logger.info('audit section %s', name)
    if name in PARALLEL_SECTIONS:
        return SECTION_RUNNERS[name](config, ensembles, workers)
    return SECTION_RUNNERS[name](config, ensembles)


def run_suite(ensembles=None, sections=None, workers=None, **overrides):
    '''
    Runs the identity audit.

    :param ensembles: Short ensemble names to restrict to (default all).
    :param sections: Section names to run (default all of
                     :data:`qmoments.settings.SECTIONS`).
    :param workers: Worker processes; sections run concurrently when
                    ``workers > 1`` and are merged in section order.
    :param overrides: Keyword overrides of :data:`AUDIT_DEFAULTS`.
    :rtype: :class:`AuditReport`
    '''
    config = audit_settings(overrides)
    if ensembles is not None:
        ensembles = tuple(check_ensemble(name, ENSEMBLES) for name in ensembles)
    sections = list(sections or SECTIONS)
    for name in sections:
        if name not in SECTION_RUNNERS:
            raise ConfigError('Unknown audit section \'{0}\''.format(name))
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_section, name, config, ensembles) for name in sections]
            results = [future.result() for future in futures]
    else:
        results = [run_section(name, config, ensembles) for name in sections]
    report = AuditReport()
    for entries in results:
        report.extend(entries)
    logger.info('audit finished: %s', report.counts())
    return report


def exit_status(report):
    '''
    ``0`` when nothing mismatches, ``3`` when the oracle routes disagree and
    ``2`` for any other mismatch.
    '''
    mismatches = report.mismatches()
    if not mismatches:
        return EXIT_OK
    if any(entry.identity == ORACLE_IDENTITY for entry in mismatches):
        return EXIT_ORACLE
    return EXIT_MISMATCH
