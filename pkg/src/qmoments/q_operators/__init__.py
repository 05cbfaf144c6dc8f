'''
Formal power series in the transform variable, the q-difference operator
algebra acting on them, Pearson pairs, and the fourth order equations
satisfied by q-Laplace (and classical Laplace) transforms.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
