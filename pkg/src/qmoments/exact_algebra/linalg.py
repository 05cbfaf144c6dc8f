'''
Exact dense linear algebra over a field whose elements are Fractions or
:class:`RatFuncQ` values.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.util import SingularSystemError


def field(value):
    '''
    Promotes Python integers into Fractions so that division stays exact.
    '''
    if isinstance(value, int):
        return Fraction(value)
    return value


def _copy(matrix):
    return [[field(value) for value in row] for row in matrix]


def determinant(matrix):
    '''
    Determinant by fraction-field Gaussian elimination with row pivoting on
    the first non-zero entry.

    :param matrix: Square list of rows.
    '''
    rows = _copy(matrix)
    size = len(rows)
    result = Fraction(1)
    for col in range(size):
        pivot = next((row for row in range(col, size) if rows[row][col] != 0), None)
        if pivot is None:
            return rows[0][0] * 0 if size else Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result
        head = rows[col][col]
        result = head * result
        for row in range(col + 1, size):
            if rows[row][col] == 0:
                continue
            factor = rows[row][col] / head
            for index in range(col + 1, size):
                rows[row][index] = rows[row][index] - factor * rows[col][index]
    return result


def row_reduce(matrix):
    '''
    Reduced row echelon form.

    :returns: Tuple ``(rows, pivot_columns)``.
    '''
    rows = _copy(matrix)
    pivots = []
    if not rows:
        return rows, pivots
    width = len(rows[0])
    current = 0
    for col in range(width):
        pivot = next((row for row in range(current, len(rows)) if rows[row][col] != 0), None)
        if pivot is None:
            continue
        rows[current], rows[pivot] = rows[pivot], rows[current]
        head = rows[current][col]
        rows[current] = [value / head for value in rows[current]]
        for row in range(len(rows)):
            if row != current and rows[row][col] != 0:
                factor = rows[row][col]
                rows[row] = [value - factor * lead for value, lead in zip(rows[row], rows[current])]
        pivots.append(col)
        current += 1
        if current == len(rows):
            break
    return rows, pivots


def solve(matrix, rhs):
    '''
    Solves a square system exactly.

    :raises SingularSystemError: if the system has no unique solution.
    '''
    size = len(matrix)
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    rows, pivots = row_reduce(augmented)
    if pivots != list(range(size)):
        raise SingularSystemError('Singular {0}x{0} system'.format(size))
    return [rows[index][size] for index in range(size)]


def nullspace(matrix, width=None):
    '''
    Basis of the right null space, one vector per free column; each vector
    has a 1 in its free column.
    '''
    if width is None:
        width = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(width)] for j in range(width)]
    rows, pivots = row_reduce(matrix)
    free = [col for col in range(width) if col not in pivots]
    basis = []
    for column in free:
        vector = [Fraction(0)] * width
        vector[column] = Fraction(1)
        for index, pivot in enumerate(pivots):
            vector[pivot] = -rows[index][column]
        basis.append(vector)
    return basis


def rank(matrix):
    return len(row_reduce(matrix)[1])
