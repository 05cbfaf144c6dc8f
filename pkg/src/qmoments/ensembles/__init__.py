'''
Orthogonal polynomial ensembles: weights, Schur averages, spectral density
moments, generating functions in N, coefficient expansions and q -> 1 limits.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from qmoments.util import QMomentsError


class Partition(object):

    '''
    An integer partition stored as a weakly decreasing tuple of positive
    parts (trailing zeros are dropped).

    :param parts: Weakly decreasing non-negative integers.
    :raises QMomentsError: if the parts are not weakly decreasing.
    '''

    __slots__ = ('parts',)

    def __init__(self, parts=()):
        parts = [int(part) for part in parts]
        if any(part < 0 for part in parts):
            raise QMomentsError('Partition parts must be non-negative: {0}'.format(parts))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise QMomentsError('Partition parts must be weakly decreasing: {0}'.format(parts))
        while parts and parts[-1] == 0:
            parts.pop()
        self.parts = tuple(parts)

    @classmethod
    def hook(cls, arm, leg):
        '''
        The hook ``(arm, 1^leg)``.
        '''
        return cls([arm] + [1] * leg)

    @classmethod
    def of_size(cls, size, max_length=None):
        '''
        Yields every partition of ``size`` (with at most ``max_length``
        parts), largest first part first.
        '''
        def build(remaining, largest, prefix):
            if remaining == 0:
                yield cls(prefix)
                return
            if max_length is not None and len(prefix) == max_length:
                return
            for part in range(min(remaining, largest), 0, -1):
                for partition in build(remaining - part, part, prefix + [part]):
                    yield partition
        return build(size, size, [])

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def padded(self, length):
        '''
        The parts padded with zeros to ``length``.
        '''
        if len(self.parts) > length:
            raise QMomentsError('Partition {0} has more than {1} parts'.format(self, length))
        return self.parts + (0,) * (length - len(self.parts))

    def odd_parts(self):
        return sum(1 for part in self.parts if part % 2)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            other = Partition(other)
        return self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        return '(' + ','.join(str(part) for part in self.parts) + ')'

    def __repr__(self):
        return 'Partition({0})'.format(list(self.parts))


def as_partition(value):
    '''
    Accepts a :class:`Partition` or any iterable of parts.
    '''
    if isinstance(value, Partition):
        return value
    return Partition(value)
