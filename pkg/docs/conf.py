# -*- coding: utf-8 -*-
#
# bubblelab documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys
import os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'numpydoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'bubblelab'
copyright = u'2026 bubblelab developers'

version = ''
release = ''

exclude_patterns = ['_build']
pygments_style = 'sphinx'
numpydoc_show_class_members = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'bubblelabdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'bubblelab.tex', u'bubblelab Documentation',
   u'bubblelab developers', 'manual'),
]

man_pages = [
    ('index', 'bubblelab', u'bubblelab Documentation',
     [u'bubblelab developers'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable/', None),
                       'scipy': ('https://docs.scipy.org/doc/scipy/', None)}
