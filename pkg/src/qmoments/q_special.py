'''
q-special functions: q-Pochhammer symbols, q-integers, q-binomial
coefficients, terminating basic hypergeometric series of type r = s + 1,
little q-Jacobi polynomials and terminating classical hypergeometric sums.

Every function works over a generic scalar ring.  Bases may be given as a tag
(``'q'``, ``'q^-1'``, ``'q^2'`` or ``'s'``) which resolves onto the exact
generators, or as any ring element (an exact :class:`RatFuncQ`, a Fraction or
an extended precision float), which is how closed forms are evaluated at a
numerical value of q.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from functools import lru_cache
from qmoments.exact_algebra import RatFuncQ, Q, S
from qmoments.util import HypergeometricDivisionError, UnsupportedSeriesError


BASE_TAGS = ('q', 'q^-1', 'q^2', 's')
_TAG_BY_VALUE = {Q: 'q', Q * Q: 'q^2', Q.inverse(): 'q^-1', S: 's'}


def resolve_base(base):
    '''
    Maps a base tag onto its exact generator; ring elements pass through.
    '''
    if isinstance(base, str):
        if base == 'q':
            return Q
        if base == 'q^-1':
            return Q.inverse()
        if base == 'q^2':
            return Q * Q
        if base == 's':
            return S
        raise ValueError('Unknown base tag \'{0}\''.format(base))
    return base


def qpochhammer(u, n, base='q'):
    '''
    ``(u; base)_n = (1 - u)(1 - u base) ... (1 - u base^(n-1))``.

    :param u: Ring element.
    :param n: Number of factors, n >= 0.
    :type n: int
    '''
    if n < 0:
        raise ValueError('Negative Pochhammer length {0}'.format(n))
    base = resolve_base(base)
    result = 1
    term = u
    for _ in range(n):
        result = result * (1 - term)
        term = term * base
    return result


def qinteger(n, base='q'):
    '''
    ``[n]_base = (1 - base^n) / (1 - base)`` as the finite sum of powers.
    '''
    base = resolve_base(base)
    total = 0
    power = 1
    for _ in range(n):
        total = total + power
        power = power * base
    return total


@lru_cache(maxsize=4096)
def _tagged_qbinomial(n, l, tag):
    return _qbinomial(n, l, resolve_base(tag))


def _qbinomial(n, l, base):
    numer = 1
    denom = 1
    for index in range(l):
        numer = numer * (1 - base ** (n - index))
        denom = denom * (1 - base ** (index + 1))
    return numer / denom


def qbinomial(n, l, base='q'):
    '''
    Gaussian binomial coefficient ``[n choose l]_base``; zero when ``l`` is
    outside ``0..n``.
    '''
    if l < 0 or n < 0 or l > n:
        return 0
    l = min(l, n - l)
    if l == 0:
        return 1
    if isinstance(base, RatFuncQ):
        base = _TAG_BY_VALUE.get(base, base)
    if isinstance(base, str):
        return _tagged_qbinomial(n, l, base)
    return _qbinomial(n, l, base)


class HypergeometricSpec(object):

    '''
    Parameters of a terminating series ``r_phi_s`` with ``r = s + 1``.

    :param upper: Upper parameters (``s + 1`` ring elements).
    :param lower: Lower parameters (``s`` ring elements).
    :param argument: The series argument.
    :param base: Base tag or ring element.
    :param term_count: Optional cap on the number of terms summed.
    '''

    def __init__(self, upper, lower, argument, base='q', term_count=None):
        self.upper = list(upper)
        self.lower = list(lower)
        self.argument = argument
        self.base = base
        self.term_count = term_count
        if len(self.upper) != len(self.lower) + 1:
            raise UnsupportedSeriesError(
                'Only r = s + 1 series are supported, got {0} upper and {1} lower'.format(
                    len(self.upper), len(self.lower)))

    def __repr__(self):
        return 'HypergeometricSpec({0}, {1}, {2}, base={3}, term_count={4})'.format(
            self.upper, self.lower, self.argument, self.base, self.term_count)


def terminating_index(parameter, base):
    '''
    Returns ``m`` when ``parameter == base^(-m)`` for an integer ``m >= 0``
    (exact values only), else ``None``.
    '''
    if parameter == 1:
        return 0
    if not isinstance(parameter, RatFuncQ) or not isinstance(base, RatFuncQ):
        return None
    monomial = parameter.as_monomial()
    base_monomial = base.as_monomial()
    if monomial is None or base_monomial is None:
        return None
    coeff, exponent = monomial
    base_coeff, base_exponent = base_monomial
    if coeff != 1 or base_coeff != 1 or base_exponent == 0:
        return None
    if exponent % base_exponent:
        return None
    power = -exponent // base_exponent
    return power if power >= 0 else None


def basic_hypergeometric(spec):
    '''
    Sums ``sum_n prod (a_i; p)_n / ((p; p)_n prod (b_j; p)_n) z^n`` exactly.

    :raises UnsupportedSeriesError: if termination cannot be established.
    :raises HypergeometricDivisionError: if a lower Pochhammer symbol
        vanishes before termination.
    '''
    base = resolve_base(spec.base)
    counts = [index + 1 for index in
              (terminating_index(parameter, base) for parameter in spec.upper)
              if index is not None]
    if spec.term_count is not None:
        counts.append(spec.term_count)
    if not counts:
        raise UnsupportedSeriesError('Cannot establish termination of {0!r}'.format(spec))
    terms = min(counts)
    total = 0
    term = 1
    power = 1
    for n in range(terms):
        if n:
            numer = 1
            for parameter in spec.upper:
                numer = numer * (1 - parameter * power)
            if numer == 0:
                break
            denom = 1 - power * base
            for parameter in spec.lower:
                denom = denom * (1 - parameter * power)
            if denom == 0:
                raise HypergeometricDivisionError(
                    'Lower Pochhammer symbol vanishes at index {0}'.format(n))
            term = term * numer * spec.argument / denom
            power = power * base
        total = total + term
    return total


def little_q_jacobi(n, x, a, b, base='q'):
    '''
    Little q-Jacobi polynomial
    ``2phi1(p^-n, a b p^(n+1); a p | p; p x)`` with ``p`` the base.
    '''
    p = resolve_base(base)
    spec = HypergeometricSpec([p ** (-n), a * b * p ** (n + 1)], [a * p], p * x,
                              base=p, term_count=n + 1)
    return basic_hypergeometric(spec)


def classical_hypergeometric_terminating(upper, lower, z):
    '''
    Terminating ``pFq(upper; lower; z)`` with rational parameters.

    :raises UnsupportedSeriesError: if no upper parameter is a non-positive
        integer.
    :raises HypergeometricDivisionError: if a lower parameter reaches zero
        before termination.
    '''
    upper = [Fraction(value) for value in upper]
    lower = [Fraction(value) for value in lower]
    stops = [int(-value) for value in upper if value.denominator == 1 and value <= 0]
    if not stops:
        raise UnsupportedSeriesError('Classical series with upper {0} does not terminate'.format(upper))
    total = Fraction(0)
    term = Fraction(1)
    for n in range(min(stops) + 1):
        if n:
            denom = Fraction(n)
            for value in lower:
                denom *= value + n - 1
            if denom == 0:
                raise HypergeometricDivisionError(
                    'Lower parameter vanishes at index {0}'.format(n))
            numer = Fraction(1)
            for value in upper:
                numer *= value + n - 1
            term = term * numer * z / denom
        total += term
    return total


def pochhammer_split_holds(u, m, n, base='q'):
    '''
    Checks ``(u; p)_(m+n) == (u; p)_m (u p^m; p)_n``.
    '''
    p = resolve_base(base)
    return qpochhammer(u, m + n, p) == qpochhammer(u, m, p) * qpochhammer(u * p ** m, n, p)


def qbinomial_inversion_holds(n, l):
    '''
    Checks ``[n choose l]_(1/q) == q^(-l(n-l)) [n choose l]_q``.
    '''
    return qbinomial(n, l, 'q^-1') == Q ** (-l * (n - l)) * qbinomial(n, l, 'q')


def reversed_qfactorial(m, r, base='q'):
    '''
    The right hand side of the reversal formula for ``(q; q)_(m-r)``:
    ``(-1)^r q^(r(r+1)/2 - r(m+1)) (q; q)_m / (q^-m; q)_r``.
    '''
    q = resolve_base(base)
    sign = -1 if r % 2 else 1
    return (sign * q ** (r * (r + 1) // 2 - r * (m + 1)) * qpochhammer(q, m, q)
            / qpochhammer(q ** (-m), r, q))


def qbinomial_generating_series(k, order, base='q'):
    '''
    Both sides of ``sum_N z^N [N+k choose N]_q = 1 / (z; q)_(k+1)`` as
    truncated series in ``z``.

    :returns: Tuple ``(direct, product)`` of :class:`FormalSeries`.
    '''
    from qmoments.q_operators.series import FormalSeries
    q = resolve_base(base)
    direct = FormalSeries([qbinomial(n + k, n, base) for n in range(order)], order)
    product = FormalSeries.one(order)
    for index in range(k + 1):
        product = product * FormalSeries([1, -q ** index], order)
    return direct, product.inverse()
