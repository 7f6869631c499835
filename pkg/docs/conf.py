# -*- coding: utf-8 -*-
#
# PgBufferSim documentation build configuration file
#
# Only values differing from the Sphinx defaults are set here.

import sys
import os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('.'))
sys.path.insert(0, os.path.abspath('../'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'PgBufferSim'
copyright = '2026, PgBufferSim developers'
author = 'PgBufferSim developers'

version = '0.3.0'
release = '0.3.0'

language = None
exclude_patterns = ['_build']
pygments_style = 'sphinx'
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'PgBufferSimdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'PgBufferSim.tex', 'PgBufferSim Documentation',
   author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'pgbuffersim', 'PgBufferSim Documentation',
     [author], 1)
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  (master_doc, 'PgBufferSim', 'PgBufferSim Documentation',
   author, 'PgBufferSim', 'A buffer pool eviction policy simulator.',
   'Miscellaneous'),
]
