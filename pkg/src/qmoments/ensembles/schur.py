'''
Averages of Schur polynomials over the ensembles: the moment determinant
oracle and the closed product forms.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import logging
from fractions import Fraction
from qmoments.ensembles import as_partition
from qmoments.ensembles import weights
from qmoments.exact_algebra import determinant, Q, S
from qmoments.q_special import qpochhammer, qbinomial
from qmoments.util import ConfigError, DegenerateGramError
from qmoments.util.math import double_factorial, rising_factorial


logger = logging.getLogger(__name__)


def hankel_determinant(weight, n):
    '''
    ``det[mu_(j+k)]_(j,k<n)``, cached on the weight.
    '''
    key = ('hankel', n)
    if key not in weight.cache:
        weight.cache[key] = determinant(
            [[weight.moment(row + col) for col in range(n)] for row in range(n)])
    return weight.cache[key]


def schur_average_oracle(weight, kappa, n):
    '''
    ``<s_kappa>`` over ``n`` eigenvalues as a ratio of moment determinants,
    ``det[mu_(kappa_(n-j) + j + k)] / det[mu_(j + k)]``.

    :raises DegenerateGramError: if the Hankel determinant vanishes.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return weight.one() * 0
    empty = hankel_determinant(weight, n)
    if empty == 0:
        raise DegenerateGramError('Hankel determinant of {0!r} vanishes at N = {1}'.format(weight, n))
    parts = kappa.padded(n)
    exponents = [parts[n - 1 - row] + row for row in range(n)]
    numer = determinant([[weight.moment(exponent + col) for col in range(n)]
                         for exponent in exponents])
    return numer / empty


def shifted_parts(kappa, n):
    '''
    ``a_j = kappa_j + n - j`` for ``j = 1..n`` and the empty-partition values
    ``n - j``.
    '''
    parts = as_partition(kappa).padded(n)
    return ([parts[j] + n - 1 - j for j in range(n)],
            [n - 1 - j for j in range(n)])


def parity_classes(kappa, n):
    '''
    Splits ``a_j = kappa_j + n - j`` into even and odd classes, returning the
    index lists ``(even, odd)`` or ``None`` when the counts differ from those
    of the empty partition (the average then vanishes).
    '''
    shifted, _ = shifted_parts(kappa, n)
    even = [j for j in range(n) if shifted[j] % 2 == 0]
    odd = [j for j in range(n) if shifted[j] % 2]
    if len(even) != (n + 1) // 2 or len(odd) != n // 2:
        return None
    return even, odd


def _empty_classes(n):
    empty = [n - 1 - j for j in range(n)]
    return ([j for j in range(n) if empty[j] % 2 == 0],
            [j for j in range(n) if empty[j] % 2])


def _vandermonde_ratio(values, empty_values, q):
    result = 1
    for k in range(len(values)):
        for l in range(k + 1, len(values)):
            result = result * (q ** values[k] - q ** values[l]) / (
                q ** empty_values[k] - q ** empty_values[l])
    return result


def dqh_schur_parity_product(kappa, n, q=Q):
    '''
    Closed product for the discrete q-Hermite average: a sign
    ``(-1)^(S/2)`` (``S`` the number of odd parts) times one factor built
    from the even ``a_j`` and one from the odd ``a_j``, each a ratio against
    the empty partition in the same parity class.  Zero when the parity
    counts fail.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return 0
    classes = parity_classes(kappa, n)
    if classes is None:
        return 0
    shifted, empty = shifted_parts(kappa, n)
    empty_even, empty_odd = _empty_classes(n)
    even, odd = classes
    sign = -1 if (kappa.odd_parts() // 2) % 2 else 1
    q2 = q * q
    result = sign * q ** 0
    for j, j0 in zip(even, empty_even):
        result = result * qpochhammer(q, shifted[j] // 2, q2) / qpochhammer(q, empty[j0] // 2, q2)
    for j, j0 in zip(odd, empty_odd):
        result = (result * qpochhammer(q, (shifted[j] + 1) // 2, q2)
                  / qpochhammer(q, (empty[j0] + 1) // 2, q2))
    result = result * _vandermonde_ratio([shifted[j] for j in even], [empty[j] for j in empty_even], q)
    result = result * _vandermonde_ratio([shifted[j] for j in odd], [empty[j] for j in empty_odd], q)
    return result


def dqh_schur_hook(k, r, n, q=Q):
    '''
    Discrete q-Hermite average of the hook ``(2k - r, 1^r)``:
    ``(-1)^floor((r+1)/2) q^(h(h+1)) [n+2k-r-1 choose 2k]_q
    [k-1 choose h]_(q^2) (q; q^2)_k`` with ``h = floor(r/2)``.
    '''
    half = r // 2
    sign = -1 if ((r + 1) // 2) % 2 else 1
    return (sign * q ** (half * (half + 1)) * qbinomial(n + 2 * k - r - 1, 2 * k, q)
            * qbinomial(k - 1, half, q * q) * qpochhammer(q, k, q * q))


def gaussian_schur_printed(kappa, n):
    '''
    Gaussian product form normalised for the weight ``exp(-x^2/2)``: the sign
    ``(-1)^(S/2)``, double factorial ratios per parity class and Vandermonde
    ratios
    ``(kappa_(j_l) - j_l - kappa_(j_k) + j_k) / (j0_k - j0_l)`` with the
    empty-partition positions ``j0``.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return Fraction(0)
    classes = parity_classes(kappa, n)
    if classes is None:
        return Fraction(0)
    parts = kappa.padded(n)
    shifted, empty = shifted_parts(kappa, n)
    empty_even, empty_odd = _empty_classes(n)
    even, odd = classes
    result = Fraction(-1 if (kappa.odd_parts() // 2) % 2 else 1)
    for j, j0 in zip(even, empty_even):
        result *= Fraction(double_factorial(shifted[j] - 1), double_factorial(empty[j0] - 1))
    for j, j0 in zip(odd, empty_odd):
        result *= Fraction(double_factorial(shifted[j]), double_factorial(empty[j0]))
    for block, empty_block in ((even, empty_even), (odd, empty_odd)):
        for k in range(len(block)):
            for l in range(k + 1, len(block)):
                jk, jl = block[k] + 1, block[l] + 1
                numer = parts[jl - 1] - jl - parts[jk - 1] + jk
                result *= Fraction(numer, empty_block[k] - empty_block[l])
    return result


def gaussian_schur_product(kappa, n):
    '''
    Gaussian average for the weight ``exp(-x^2)``: the printed form times
    ``2^(-|kappa|/2)``.
    '''
    kappa = as_partition(kappa)
    return gaussian_schur_printed(kappa, n) / Fraction(2) ** (kappa.size // 2)


def lql_schur_product(kappa, n, alpha, q=Q):
    '''
    Little q-Laguerre average
    ``prod_j (q^(alpha+1); q)_(a_j) / (q^(alpha+1); q)_(n-j)`` times the
    q-Vandermonde ratio.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return 0
    shifted, empty = shifted_parts(kappa, n)
    base = q ** (alpha + 1)
    result = q ** 0
    for value, empty_value in zip(shifted, empty):
        result = result * qpochhammer(base, value, q) / qpochhammer(base, empty_value, q)
    return result * _vandermonde_ratio(shifted, empty, q)


def laguerre_schur_product(kappa, n, alpha):
    '''
    Laguerre average ``prod (alpha+1)_(a_j)/(alpha+1)_(n-j)`` times
    ``prod (a_j - a_l)/(l - j)``.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return Fraction(0)
    shifted, empty = shifted_parts(kappa, n)
    result = Fraction(1)
    for value, empty_value in zip(shifted, empty):
        result *= Fraction(rising_factorial(alpha + 1, value), rising_factorial(alpha + 1, empty_value))
    for j in range(n):
        for l in range(j + 1, n):
            result *= Fraction(shifted[j] - shifted[l], l - j)
    return result


def sw_schur_printed(kappa, n, s=S):
    '''
    Stieltjes-Wigert product in the rescaled variable:
    ``q^(-sum kappa_j^2 / 2) prod_(j<k) (1 - q^-(kappa_j - j - kappa_k + k)) / (1 - q^-(k - j))``.
    '''
    kappa = as_partition(kappa)
    if len(kappa) > n:
        return 0
    q = s * s
    parts = kappa.padded(n)
    result = s ** (-sum(part * part for part in parts))
    for j in range(n):
        for k in range(j + 1, n):
            result = result * (1 - q ** (-(parts[j] - parts[k] + k - j))) / (1 - q ** (-(k - j)))
    return result


def sw_convention_factor(kappa, n, s=S):
    '''
    ``q^(-(n - 1/2)|kappa|)``, relating the rescaled variable to the lattice
    variable of the oracle.
    '''
    return s ** (-(2 * n - 1) * as_partition(kappa).size)


def schur_average_closed(weight, kappa, n):
    '''
    ``<s_kappa>`` from the closed product form of the weight's ensemble.
    '''
    kappa = as_partition(kappa)
    name = weight.name
    if name == weights.STIELTJES_WIGERT:
        value = sw_schur_printed(kappa, n) * sw_convention_factor(kappa, n)
    elif name == weights.DISCRETE_Q_HERMITE:
        value = dqh_schur_parity_product(kappa, n)
    elif name == weights.LITTLE_Q_LAGUERRE:
        value = lql_schur_product(kappa, n, weight.alpha)
    elif name == weights.GAUSSIAN:
        value = gaussian_schur_product(kappa, n)
    elif name == weights.LAGUERRE:
        value = laguerre_schur_product(kappa, n, weight.alpha)
    else:
        raise ConfigError('No closed Schur average for {0}'.format(name))
    return weight.one() * value
