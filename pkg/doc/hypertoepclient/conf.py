# -*- coding: utf-8 -*-
#
# HyperToep Client documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

sys.path.insert(0, os.path.abspath(os.path.join('..', '..', 'src', 'python')))
from HyperToepClient import __version__ as htc_version

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest',
              'sphinx.ext.intersphinx', 'sphinx.ext.mathjax',
              'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
source_encoding = 'utf-8'
master_doc = 'index'

project = 'HyperToep Client'
copyright = 'HyperToep Client developers'

version = htc_version
release = htc_version

today_fmt = '%B %d, %Y'
add_function_parentheses = True
add_module_names = True
pygments_style = 'sphinx'
autoclass_content = 'both'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinxdoc'
html_title = 'HyperToep Client, version %s ' % version
html_last_updated_fmt = '%b %d, %Y'
html_show_sourcelink = False
htmlhelp_basename = 'HyperToepClientdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'HyperToepClient.tex', u'HyperToep Client Documentation',
   u'HyperToep Client developers', 'manual'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
