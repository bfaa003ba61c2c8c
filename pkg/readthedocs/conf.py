#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Sphinx configuration for the kronsampler documentation.
import re
import os
import sys

sys.path.insert(0, os.path.abspath(os.curdir))
sys.path.insert(0, os.path.abspath(os.pardir))

root = os.path.abspath(os.path.join(__file__, os.path.pardir, os.path.pardir))


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax'
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}

# Lets `SamplingClient` and friends be cross-referenced without :obj:
default_role = "py:obj"

autodoc_member_order = 'bysource'

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'kronsampler'
copyright = '2026, kronsampler contributors'
author = 'kronsampler contributors'

with open(os.path.join(root, 'kronsampler', 'version.py'), 'r') as f:
    version = re.search(r"^__version__\s+=\s+'(.*)'$",
                        f.read(), flags=re.MULTILINE).group(1)

release = version

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'friendly'


def skip(app, what, name, obj, would_skip, options):
    if name.endswith('__'):
        # Dunder members are shown, apart from these
        return name in {'__init__', '__module__', '__doc__', '__dict__',
                        '__abstractmethods__', '__reduce__'}

    return would_skip


def setup(app):
    app.connect("autodoc-skip-member", skip)


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': True,
    'navigation_depth': 3,
}
htmlhelp_basename = 'kronsamplerdoc'
