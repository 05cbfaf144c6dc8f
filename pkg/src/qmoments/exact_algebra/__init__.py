'''
Exact arithmetic: Laurent polynomials, canonical rational functions of one
variable, polynomials in ``x`` over those functions and dense linear algebra.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.exact_algebra.poly import PolyQ
from qmoments.exact_algebra.ratfunc import RatFuncQ, Q, S
from qmoments.exact_algebra.xpoly import XPoly, q_bracket
from qmoments.exact_algebra.linalg import determinant, solve, nullspace

__all__ = ['PolyQ', 'RatFuncQ', 'Q', 'S', 'XPoly', 'q_bracket',
           'determinant', 'solve', 'nullspace']
