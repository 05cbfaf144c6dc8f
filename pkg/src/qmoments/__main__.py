'''
``python -m qmoments`` runs the command line front end.

.. moduleauthor:: Chris Fournier <chris.m.fournier@gmail.com>
'''
from __future__ import absolute_import
import sys
from qmoments.cli import main


sys.exit(main())
