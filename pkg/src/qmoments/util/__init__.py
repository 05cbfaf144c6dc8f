'''
Utility functions and classes for the package, including the exception
hierarchy shared by every module.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import


class QMomentsError(Exception):

    '''
    Indicates that a runtime check has failed, and a computation is performing
    incorrectly, or input validation has failed.  Generation of this exception
    is tested.

    :param message: Explanation for the exception.
    :type message: str
    '''

    def __init__(self, message):
        '''
        Initializer.

        :param message: Explanation for the exception.
        :type message: str
        '''
        Exception.__init__(self, message)


class PoleError(QMomentsError, ZeroDivisionError):

    '''
    A rational function was evaluated at a root of its (reduced) denominator,
    or a zero denominator was supplied.
    '''


class DegenerateGramError(QMomentsError):

    '''
    The Hankel (Gram) determinant of a moment sequence vanished, so the
    moment functional does not define an orthogonal polynomial ensemble of the
    requested size.
    '''


class HypergeometricDivisionError(QMomentsError, ZeroDivisionError):

    '''
    A lower-parameter Pochhammer symbol vanished before a terminating
    hypergeometric series terminated.
    '''


class UnsupportedSeriesError(QMomentsError):

    '''
    A hypergeometric series has an unsupported shape or cannot be shown to
    terminate.
    '''


class SingularSystemError(QMomentsError):

    '''
    A linear system that was expected to have a unique solution is singular.
    '''


class NotEigenError(QMomentsError):

    '''
    A polynomial is not an eigenfunction of the second order (q-)difference
    operator built from a Pearson pair.
    '''


class IllConditionedError(QMomentsError):

    '''
    A least-squares extrapolation matrix is numerically near-singular.
    '''


class QuadratureFailure(QMomentsError):

    '''
    Adaptive quadrature did not reach the requested tolerance.
    '''


class OracleDisagreementError(QMomentsError):

    '''
    Two independent oracle routes produced different exact values for the
    same quantity.
    '''


class ConfigError(QMomentsError):

    '''
    A run configuration is invalid (empty range, base outside (0, 1), etc.).
    '''


class ExpansionError(QMomentsError):

    '''
    Moment values are not reproduced by a finite expansion in powers of
    ``q^N`` extracted from them.
    '''
