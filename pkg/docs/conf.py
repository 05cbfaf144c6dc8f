# -*- coding: utf-8 -*-
#
# qmoments documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# The package lives under src/.
sys.path.insert(0, os.path.abspath('../src'))

from qmoments import (__version__, __version_number__, __project__,
    __copyright__)

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.mathjax']

source_suffix = '.rst'
master_doc = 'index'

project = __project__
copyright = __copyright__

# The short X.Y version.
version = __version_number__
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = ['_build']

# Members are documented in source order, which follows the module layout.
autodoc_member_order = 'bysource'

show_authors = True
pygments_style = 'sphinx'


# -- Options for HTML output ---------------------------------------------------

html_theme = 'alabaster'
html_title = '%(project)s v%(release)s Documentation' % \
{
	'project' : project,
	'release' : release
}
html_last_updated_fmt = '%b %d, %Y'
html_show_sourcelink = False
html_show_sphinx = False
htmlhelp_basename = 'qmomentsdoc'


# -- Options for LaTeX, manual page and Texinfo output -------------------------

latex_documents = [
  ('index', 'qmoments.tex', u'qmoments Documentation',
   u'Chris Fournier', 'manual'),
]

man_pages = [
    ('index', 'qmoments', u'qmoments Documentation',
     [u'Chris Fournier'], 1)
]

texinfo_documents = [
  ('index', 'qmoments', u'qmoments Documentation',
   u'Chris Fournier', 'qmoments', 'Exact moments of q-deformed random matrix ensembles.',
   'Miscellaneous'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
