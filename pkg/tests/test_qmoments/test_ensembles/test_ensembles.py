'''
Tests partitions and ensemble weights.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
from fractions import Fraction
from qmoments.ensembles import Partition, as_partition
from qmoments.ensembles import weights
from qmoments.exact_algebra import Q, S
from qmoments.util import ConfigError, QMomentsError
from qmoments.util.test import TestCase


class TestPartition(TestCase):

    '''
    Integer partitions.
    '''

    def test_trailing_zeros(self):
        '''
        Trailing zeros are dropped.
        '''
        self.assertEqual(Partition([2, 1, 0]).parts, (2, 1))
        self.assertEqual(Partition([2, 1, 0]), (2, 1))
        self.assertEqual(len(Partition()), 0)

    def test_not_decreasing(self):
        '''
        Parts must be weakly decreasing and non-negative.
        '''
        self.assertRaises(QMomentsError, Partition, [1, 2])
        self.assertRaises(QMomentsError, Partition, [1, -1])

    def test_of_size(self):
        '''
        Enumeration, largest first part first.
        '''
        self.assertEqual([p.parts for p in Partition.of_size(3)], [(3,), (2, 1), (1, 1, 1)])
        self.assertEqual([p.parts for p in Partition.of_size(4, max_length=2)],
                         [(4,), (3, 1), (2, 2)])
        self.assertEqual([p.parts for p in Partition.of_size(0)], [()])

    def test_hook(self):
        '''
        ``(arm, 1^leg)``.
        '''
        self.assertEqual(Partition.hook(3, 2), (3, 1, 1))
        self.assertEqual(Partition.hook(1, 0).size, 1)

    def test_padded(self):
        '''
        Zero padding, and the length limit.
        '''
        self.assertEqual(Partition([2, 1]).padded(4), (2, 1, 0, 0))
        self.assertRaises(QMomentsError, Partition([2, 1]).padded, 1)

    def test_odd_parts(self):
        '''
        Number of odd parts.
        '''
        self.assertEqual(Partition([3, 2, 1]).odd_parts(), 2)

    def test_str(self):
        '''
        Printed form.
        '''
        self.assertEqual(str(Partition([2, 1])), '(2,1)')
        self.assertIs(as_partition(Partition([1])).__class__, Partition)


class TestWeights(TestCase):

    '''
    Moment sequences and weight lookup.
    '''

    def test_dqh_moments(self):
        '''
        ``mu_0 = 1 - q``, ``mu_2 = (1 - q)^2`` and odd moments vanish.
        '''
        weight = weights.weight_by_name('dqh')
        self.assertRatEqual(weight.moment(0), 1 - Q)
        self.assertRatEqual(weight.moment(1), 0)
        self.assertRatEqual(weight.moment(2), (1 - Q) ** 2)
        self.assertRatEqual(weight.moment(4), (1 - Q) ** 2 * (1 - Q ** 3))

    def test_sw_moments(self):
        '''
        ``mu_n = s^-(n^2 + n + 1)``.
        '''
        weight = weights.stieltjes_wigert()
        self.assertRatEqual(weight.moment(0), S ** -1)
        self.assertRatEqual(weight.moment(2), S ** -7)
        self.assertRatEqual(weight.q, S ** 2)
        self.assertEqual(weight.base, 's')

    def test_lql_moments(self):
        '''
        ``nu_n = (q^(alpha+1); q)_n``.
        '''
        weight = weights.little_q_laguerre(2)
        self.assertRatEqual(weight.moment(0), 1)
        self.assertRatEqual(weight.moment(1), 1 - Q ** 3)
        self.assertEqual(weight.alpha, 2)

    def test_classical_moments(self):
        '''
        Gaussian, Laguerre and Jacobi moments.
        '''
        self.assertEqual(weights.gaussian().moment(4), Fraction(3, 4))
        self.assertEqual(weights.gaussian().moment(3), 0)
        self.assertEqual(weights.laguerre(2).moment(1), 3)
        self.assertEqual(weights.jacobi(0, 0).moment(1), Fraction(1, 2))
        self.assertEqual(weights.jacobi(1, 0).moment(1), Fraction(2, 3))

    def test_names(self):
        '''
        Short and full names resolve onto the same ensemble.
        '''
        self.assertEqual(weights.weight_by_name('sw').name, weights.STIELTJES_WIGERT)
        self.assertEqual(weights.weight_by_name(weights.LAGUERRE, 1).alpha, 1)
        self.assertEqual(weights.discrete_q_hermite().short_name, 'dqh')
        self.assertTrue(weights.little_q_laguerre().is_q)
        self.assertFalse(weights.gaussian().is_q)

    def test_unknown_name(self):
        '''
        Unknown ensembles raise :class:`ConfigError`.
        '''
        self.assertRaises(ConfigError, weights.weight_by_name, 'unknown')

    def test_bad_alpha(self):
        '''
        ``alpha`` must be a non-negative integer.
        '''
        self.assertRaises(ConfigError, weights.little_q_laguerre, -1)
        self.assertRaises(ConfigError, weights.laguerre, Fraction(1, 2))

    def test_weight_moment(self):
        '''
        Negative indices are rejected.
        '''
        weight = weights.gaussian()
        self.assertEqual(weights.weight_moment(weight, 2), Fraction(1, 2))
        self.assertRaises(ConfigError, weights.weight_moment, weight, -1)

    def test_pearson_pair_present(self):
        '''
        Every q-weight carries a Pearson pair of degrees at most two and one.
        '''
        for weight in (weights.stieltjes_wigert(), weights.discrete_q_hermite(),
                       weights.little_q_laguerre(1)):
            self.assertLessEqual(weight.sigma.degree(), 2)
            self.assertIn(weight.tau.degree(), (0, 1))
