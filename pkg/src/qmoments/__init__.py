'''
Exact moments of q-deformed orthogonal polynomial ensembles
(Stieltjes-Wigert, discrete q-Hermite, little q-Laguerre) and of their
classical limits, computed by closed forms and by independent oracles, with
an audit of every identity that links them.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import sys
from types import ModuleType


# Package description
__version_number__ = '0.1.0'
__release__ = None
__version__ = '-'.join((__version_number__, __release__)) if __release__ is not None else __version_number__
__project__ = 'qmoments'
__package__ = 'qmoments'
__author__ = 'Chris Fournier'
__author_email__ = 'chris.m.fournier@gmail.com'
__copyright__ = '2024, ' + __author__
__description__ = 'Exact moments and identity audits for q-deformed orthogonal polynomial ensembles'


# The import magic shown here was taken (nearly verbatim) from the Werkzeug
# package; see http://werkzeug.pocoo.org/

# import mapping to objects in other modules
all_by_module = {
    'qmoments.exact_algebra':   ['PolyQ', 'RatFuncQ', 'Q', 'S', 'XPoly', 'q_bracket',
                                 'determinant', 'solve', 'nullspace'],
    'qmoments.q_special':       ['qpochhammer', 'qinteger', 'qbinomial',
                                 'HypergeometricSpec', 'basic_hypergeometric',
                                 'little_q_jacobi'],
    'qmoments.ensembles':       ['Partition'],
    'qmoments.ensembles.weights':
                                ['WeightSpec', 'weight_by_name', 'weight_moment',
                                 'stieltjes_wigert', 'discrete_q_hermite',
                                 'little_q_laguerre', 'gaussian', 'laguerre', 'jacobi'],
    'qmoments.ensembles.schur': ['schur_average_oracle', 'schur_average_closed'],
    'qmoments.ensembles.density':
                                ['density_moment_oracle', 'density_moment_closed',
                                 'MomentTable', 'moment_table'],
    'qmoments.ensembles.genfunc':
                                ['generating_function'],
    'qmoments.ensembles.coefficients':
                                ['coefficient_expansion'],
    'qmoments.ensembles.limits':
                                ['q_to_one_limits'],
    'qmoments.ensembles.recurrence':
                                ['recurrence_search'],
    'qmoments.q_operators.series':
                                ['FormalSeries', 'QOperator'],
    'qmoments.q_operators.pearson':
                                ['pearson_verify'],
    'qmoments.q_operators.laplace':
                                ['series_from_measure', 'fourth_order_operator',
                                 'verify_annihilation'],
    'qmoments.q_operators.classical':
                                ['classical_ode_check'],
    'qmoments.hermite_measure': ['linearisation_monic', 'squared_moment'],
    'qmoments.asymptotics':     ['scaling_probe', 'extrapolate_leading',
                                 'limiting_density'],
    'qmoments.audit':           ['AuditEntry', 'AuditReport'],
    'qmoments.suite':           ['run_suite'],
    'qmoments.data':            ['DataIOError'],
    'qmoments.util':            ['QMomentsError', 'ConfigError'],
}


object_origins = {}
for module, items in all_by_module.items():
    for item in items:
        object_origins[item] = module


class module(ModuleType):
    """Automatically import objects from the modules."""

    def __getattr__(self, name):
        if name in object_origins:
            module = __import__(object_origins[name], None, None, [name])
            for extra_name in all_by_module[module.__name__]:
                setattr(self, extra_name, getattr(module, extra_name))
            return getattr(module, name)
        return ModuleType.__getattribute__(self, name)

    def __dir__(self):
        """Just show what we want to show."""
        result = list(new_module.__all__)
        result.extend(
            ('__file__', '__path__', '__doc__', '__all__',
             '__docformat__', '__name__', '__path__', '__package__',
             '__project__', '__version__'))
        return result


# keep a reference to this module so that it's not garbage collected
old_module = sys.modules['qmoments']


# setup the new module and patch it into the dict of loaded modules
new_module = sys.modules['qmoments'] = module('qmoments')
new_module.__dict__.update({
    '__file__':             __file__,
    '__path__':             __path__,
    '__package__':          __package__,
    '__project__':          __project__,
    '__doc__':              __doc__,
    '__version__':          __version__,
    '__version_number__':   __version_number__,
    '__author__':           __author__,
    '__author_email__':     __author_email__,
    '__copyright__':        __copyright__,
    '__all__':              tuple(object_origins),
    '__docformat__':        'restructuredtext en',
    '__description__':      __description__
})
