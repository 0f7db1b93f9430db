# -*- coding: utf-8 -*-
#
# wordgroups documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# Make the package importable without installing it:
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.doctest',
              'sphinx.ext.intersphinx',
              'sphinx.ext.mathjax',
              'sphinx.ext.napoleon',
              ]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'wordgroups'
copyright = u'wordgroups developers'

# The short X.Y version and the full release, read from the package:
ver_file = os.path.join('..', 'wordgroups', 'version.py')
with open(ver_file) as f:
    exec(f.read())
version = '%s.%s' % (_version_major, _version_minor)
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# numpydoc sections (Parameters / Returns / Notes):
napoleon_google_docstring = False
napoleon_numpy_docstring = True

autodoc_member_order = 'bysource'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'wordgroupsdoc'

# -- Options for LaTeX output --------------------------------------------------

latex_elements = {
}
latex_documents = [
  ('index', 'wordgroups.tex', u'wordgroups Documentation',
   u'wordgroups developers', 'manual'),
]

man_pages = [
    ('index', 'wordgroups', u'wordgroups Documentation',
     [u'wordgroups developers'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'networkx': ('https://networkx.org/documentation/stable',
                                    None)}
