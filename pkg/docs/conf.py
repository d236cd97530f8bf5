#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# primexp documentation build configuration file.

import os
import sys

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
sys.path.insert(0, project_root)

import primexp

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'primexp'
copyright = u'2026, primexp developers'

# The short X.Y version.
version = primexp.__version__
# The full version, including alpha/beta/rc tags.
release = primexp.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'primexpdoc'

latex_documents = [
    ('index', 'primexp.tex', u'primexp Documentation',
     u'primexp developers', 'manual'),
]

man_pages = [
    ('index', 'primexp', u'primexp Documentation',
     [u'primexp developers'], 1)
]
