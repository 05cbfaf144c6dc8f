'''
Truncated formal power series and the composable q-difference operators that
act on them.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.exact_algebra import q_bracket


class FormalSeries(object):

    '''
    Power series ``sum(coeffs[k] t^k)`` known up to (but excluding) ``t^order``.

    :param coeffs: Coefficients, lowest first; padded with zeros or
                   truncated to ``order``.
    :param order: Number of known coefficients.
    '''

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        coeffs = coeffs[:order]
        coeffs.extend([Fraction(0)] * (order - len(coeffs)))
        self.coeffs = [Fraction(value) if isinstance(value, int) else value for value in coeffs]
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def monomial(cls, power, order, coeff=1):
        '''
        ``coeff * t^power`` truncated at ``order``.
        '''
        return cls([0] * power + [coeff], order)

    def __getitem__(self, index):
        return self.coeffs[index]

    def __len__(self):
        return self.order

    def truncate(self, order):
        return FormalSeries(self.coeffs, min(order, self.order))

    def _coerce(self, other):
        if isinstance(other, FormalSeries):
            return other
        return FormalSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        return FormalSeries([a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])], order)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-value for value in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return FormalSeries([value * other for value in self.coeffs], self.order)
        order = min(self.order, other.order)
        result = [0] * order
        for i in range(order):
            left = self.coeffs[i]
            if left == 0:
                continue
            for j in range(order - i):
                right = other.coeffs[j]
                if right != 0:
                    result[i + j] = result[i + j] + left * right
        return FormalSeries(result, order)

    def __rmul__(self, other):
        return FormalSeries([other * value for value in self.coeffs], self.order)

    def inverse(self):
        '''
        Multiplicative inverse; requires a non-zero constant term.
        '''
        head = self.coeffs[0]
        if head == 0:
            raise ZeroDivisionError('Series with zero constant term is not invertible')
        result = [1 / head if not isinstance(head, Fraction) else Fraction(1) / head]
        for n in range(1, self.order):
            total = 0
            for j in range(1, n + 1):
                if self.coeffs[j] != 0:
                    total = total + self.coeffs[j] * result[n - j]
            result.append(-total * result[0])
        return FormalSeries(result, self.order)

    def __truediv__(self, other):
        if isinstance(other, FormalSeries):
            return self * other.inverse()
        return FormalSeries([value / other for value in self.coeffs], self.order)

    def shift(self, power):
        '''
        Multiplies by ``t^power`` keeping the same order.
        '''
        return FormalSeries([0] * power + self.coeffs, self.order)

    def scale_argument(self, factor):
        '''
        ``f(t) -> f(factor * t)``.
        '''
        result = []
        power = 1
        for value in self.coeffs:
            result.append(value * power)
            power = power * factor
        return FormalSeries(result, self.order)

    def is_zero(self):
        return all(value == 0 for value in self.coeffs)

    def first_nonzero(self):
        '''
        :returns: ``(index, value)`` of the first non-zero coefficient or
                  ``None``.
        '''
        for index, value in enumerate(self.coeffs):
            if value != 0:
                return index, value
        return None

    def __eq__(self, other):
        if not isinstance(other, FormalSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[:order], other.coeffs[:order]))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'FormalSeries([{0}], order={1})'.format(
            ', '.join(str(value) for value in self.coeffs), self.order)


class QOperator(object):

    '''
    A linear operator on :class:`FormalSeries`.

    :param action: Callable mapping an input coefficient list to an output
                   coefficient list.
    :param loss: Number of top coefficients that become unknown.
    :param label: Symbolic description used in logs and audit notes.
    '''

    __slots__ = ('action', 'loss', 'label')

    def __init__(self, action, loss=0, label='?'):
        self.action = action
        self.loss = loss
        self.label = label

    def __call__(self, series):
        return self.apply(series)

    def apply(self, series):
        order = max(series.order - self.loss, 0)
        coeffs = self.action(list(series.coeffs))
        return FormalSeries(coeffs[:order], order)

    def __mul__(self, other):
        if isinstance(other, QOperator):
            inner, outer = other, self

            def composed(coeffs):
                return outer.action(inner.action(coeffs))
            return QOperator(composed, self.loss + other.loss,
                             '{0}·{1}'.format(self.label, other.label))
        return scalar(other) * self

    def __rmul__(self, other):
        return scalar(other) * self

    def __add__(self, other):
        if not isinstance(other, QOperator):
            other = scalar(other)
        left, right = self, other

        def added(coeffs):
            first, second = left.action(coeffs), right.action(coeffs)
            size = min(len(first), len(second))
            return [a + b for a, b in zip(first[:size], second[:size])]
        return QOperator(added, max(self.loss, other.loss),
                         '({0} + {1})'.format(self.label, other.label))

    __radd__ = __add__

    def __neg__(self):
        return scalar(-1) * self

    def __sub__(self, other):
        if not isinstance(other, QOperator):
            other = scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return scalar(other) + (-self)

    def __repr__(self):
        return 'QOperator({0})'.format(self.label)


def identity():
    return QOperator(lambda coeffs: list(coeffs), 0, '1')


def scalar(value):
    '''
    Multiplication by a scalar (exact ring element).
    '''
    return QOperator(lambda coeffs: [value * item for item in coeffs], 0, '({0})'.format(value))


def mul_lambda(power=1):
    '''
    Multiplication by ``lambda^power``.
    '''
    def action(coeffs):
        return ([Fraction(0)] * power + coeffs)[:len(coeffs)]
    return QOperator(action, 0, 'λ' if power == 1 else 'λ^{0}'.format(power))


def d_q(q):
    '''
    The q-derivative in ``lambda``: ``a_k -> [k+1]_q a_(k+1)``.
    '''
    def action(coeffs):
        return [q_bracket(k + 1, q) * coeffs[k + 1] for k in range(len(coeffs) - 1)]
    return QOperator(action, 1, 'D')


def shift(q, power=1):
    '''
    ``Lambda^power``: ``a_k -> q^(power k) a_k``.
    '''
    def action(coeffs):
        return [q ** (power * k) * value for k, value in enumerate(coeffs)]
    return QOperator(action, 0, 'Λ' if power == 1 else 'Λ^{0}'.format(power))


def resolvent(q, index):
    '''
    ``(1 + q^index Lambda)^-1``: ``a_k -> a_k / (1 + q^(index + k))``.
    '''
    def action(coeffs):
        return [value / (1 + q ** (index + k)) for k, value in enumerate(coeffs)]
    return QOperator(action, 0, 'R{0}'.format(index))


def polynomial_in_d(coeffs, q, label='𝓡'):
    '''
    ``sum(coeffs[j] D^j)`` for ring coefficients.
    '''
    degree = len(coeffs) - 1
    while degree > 0 and coeffs[degree] == 0:
        degree -= 1
    derivative = d_q(q)

    def action(values):
        total = [coeffs[0] * value for value in values] if coeffs else [0] * len(values)
        current = values
        for j in range(1, degree + 1):
            current = derivative.action(current)
            if coeffs[j] == 0:
                continue
            total = [a + coeffs[j] * b for a, b in zip(total, current)]
        return total
    return QOperator(action, max(degree, 0), label)
