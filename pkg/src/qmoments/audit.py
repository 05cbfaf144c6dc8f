'''
Identity audit: compares printed closed forms against independent exact
oracles and records, per identity, whether they agree exactly, agree up to
one global monomial ``c q^e``, or disagree (with a witness).

The recorded factor always satisfies ``printed = factor * truth``; for
functions of ``s`` (``q = s^2``) the exponent is reported in units of ``q``
and may be a half integer.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from qmoments.exact_algebra import RatFuncQ


logger = logging.getLogger(__name__)

EXACT = 'exact'
MONOMIAL = 'exact_up_to_monomial'
MISMATCH = 'mismatch'
STATUSES = (EXACT, MONOMIAL, MISMATCH)

SCHEMA_VERSION = 1


def monomial_ratio(printed, truth):
    '''
    ``(coefficient, exponent)`` with ``printed = coefficient * q^exponent *
    truth`` when the ratio is a monomial, else ``None``.

    :param printed: Exact value (RatFuncQ, Fraction or int).
    :param truth: Exact value of the same ring.
    '''
    if truth == 0 or printed == 0:
        return None
    ratio = printed / truth
    if not isinstance(ratio, RatFuncQ):
        return Fraction(ratio), 0
    monomial = ratio.as_monomial()
    if monomial is None:
        return None
    coeff, exponent = monomial
    if ratio.var == 's':
        exponent = Fraction(exponent, 2)
        if exponent.denominator == 1:
            exponent = int(exponent)
    return Fraction(coeff), exponent


def render(value):
    '''
    Canonical printed form of an exact value, used in witnesses and reports.
    '''
    if isinstance(value, float):
        return repr(value)
    return str(value)


class AuditEntry(object):

    '''
    Outcome of auditing one identity over a tested range.

    :param identity: Identity id.
    :param ensemble: Ensemble name (or ``None`` for ensemble free identities).
    :param status: One of :data:`STATUSES`.
    :param factor: Monomial coefficient for :data:`MONOMIAL`.
    :param exponent: Monomial exponent in units of ``q``.
    :param witness: Dict describing a counterexample for :data:`MISMATCH`.
    :param tested: List of tested parameter cells.
    :param note: Free text explanation.
    '''

    def __init__(self, identity, ensemble=None, status=EXACT, factor=None,
                 exponent=None, witness=None, tested=None, note=None):
        if status not in STATUSES:
            raise ValueError('Unknown audit status \'{0}\''.format(status))
        self.identity = identity
        self.ensemble = ensemble
        self.status = status
        self.factor = factor
        self.exponent = exponent
        self.witness = witness
        self.tested = list(tested or [])
        self.note = note

    @property
    def is_mismatch(self):
        return self.status == MISMATCH

    def as_dict(self):
        result = {'identity': self.identity, 'status': self.status,
                  'range': self.tested}
        if self.ensemble is not None:
            result['ensemble'] = self.ensemble
        if self.status == MONOMIAL:
            result['factor'] = str(self.factor)
            result['exponent'] = str(self.exponent)
        if self.witness is not None:
            result['witness'] = self.witness
        if self.note:
            result['note'] = self.note
        return result

    def __repr__(self):
        if self.status == MONOMIAL:
            return 'AuditEntry({0}, {1}, {2} q^{3})'.format(
                self.identity, self.status, self.factor, self.exponent)
        return 'AuditEntry({0}, {1})'.format(self.identity, self.status)


class IdentityCheck(object):

    '''
    Accumulates cell-by-cell comparisons of one identity.

    All cells must share a single ratio for the identity to be classed
    :data:`EXACT` or :data:`MONOMIAL`; the first cell breaking that rule
    becomes the witness.
    '''

    def __init__(self, identity, ensemble=None, note=None):
        self.identity = identity
        self.ensemble = ensemble
        self.note = note
        self.tested = []
        self.ratio = None
        self.witness = None

    def check(self, printed, truth, **cell):
        '''
        Compares one cell; ``cell`` holds the parameters (``k``, ``N``, ...).

        :returns: ``True`` if the cell is consistent with the cells so far.
        '''
        self.tested.append(dict(cell))
        if self.witness is not None:
            return False
        if printed == truth:
            ratio = (Fraction(1), 0) if truth != 0 else None
        else:
            ratio = monomial_ratio(printed, truth)
            if ratio is None:
                return self._fail(printed, truth, cell)
        if ratio is None:
            return True
        if self.ratio is None:
            self.ratio = ratio
            return True
        if ratio != self.ratio:
            return self._fail(printed, truth, cell)
        return True

    def record(self, passed, detail=None, **cell):
        '''
        Records a cell decided by a predicate rather than by comparing two
        values; ``detail`` becomes the witness of the first failing cell.
        '''
        self.tested.append(dict(cell))
        if passed or self.witness is not None:
            return bool(passed)
        self.witness = {'cell': dict(cell), 'detail': detail}
        logger.debug('%s failed at %s', self.identity, cell)
        return False

    def _fail(self, printed, truth, cell):
        try:
            difference = render(printed - truth)
        except (TypeError, ValueError):
            difference = None
        self.witness = {'cell': dict(cell), 'printed': render(printed),
                        'truth': render(truth), 'difference': difference}
        logger.debug('%s mismatch at %s', self.identity, cell)
        return False

    def entry(self):
        '''
        The :class:`AuditEntry` summarising every cell checked so far.
        '''
        if self.witness is not None:
            status = MISMATCH
        elif self.ratio is None or self.ratio == (Fraction(1), 0):
            status = EXACT
        else:
            status = MONOMIAL
        factor, exponent = self.ratio if status == MONOMIAL else (None, None)
        return AuditEntry(self.identity, self.ensemble, status, factor, exponent,
                          self.witness, self.tested, self.note)


def compare(identity, printed, truth, ensemble=None, note=None, **cell):
    '''
    Audits a single cell.

    :rtype: :class:`AuditEntry`
    '''
    check = IdentityCheck(identity, ensemble, note)
    check.check(printed, truth, **cell)
    return check.entry()


def compare_series(identity, printed, truth, ensemble=None, note=None, **cell):
    '''
    Audits two truncated series coefficient by coefficient; the tested cells
    are indexed by the power ``z``.
    '''
    check = IdentityCheck(identity, ensemble, note)
    order = min(printed.order, truth.order)
    for index in range(order):
        params = dict(cell)
        params['z'] = index
        check.check(printed[index], truth[index], **params)
    return check.entry()


class AuditReport(object):

    '''
    Ordered collection of :class:`AuditEntry` objects with a versioned JSON
    form.
    '''

    def __init__(self, entries=None):
        self.entries = list(entries or [])

    def add(self, entry):
        self.entries.append(entry)
        level = logging.WARNING if entry.is_mismatch else logging.DEBUG
        logger.log(level, '%s [%s]: %s', entry.identity, entry.ensemble, entry.status)
        return entry

    def extend(self, entries):
        for entry in entries:
            self.add(entry)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def identities(self):
        return set(entry.identity for entry in self.entries)

    def mismatches(self):
        return [entry for entry in self.entries if entry.is_mismatch]

    def find(self, identity, ensemble=None):
        '''
        Entries for an identity, optionally restricted to one ensemble.
        '''
        return [entry for entry in self.entries
                if entry.identity == identity and (ensemble is None or entry.ensemble == ensemble)]

    def counts(self):
        result = dict((status, 0) for status in STATUSES)
        for entry in self.entries:
            result[entry.status] += 1
        return result

    def as_dict(self):
        return {'schema': SCHEMA_VERSION, 'counts': self.counts(),
                'entries': [entry.as_dict() for entry in self.entries]}
