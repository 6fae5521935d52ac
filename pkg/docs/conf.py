# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'uniprof'
copyright = '2026, uniprof developers'
author = 'uniprof developers'

version = '0.1'
release = '0.1'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'autoapi.extension',
    'numpydoc'
]

autoapi_dirs = ['../uniprof']
autoapi_options = ['members',
                   'undoc-members',
                   'show-inheritance',
                   'show-module-summary',
                   'special-members',
                   ]
autoapi_ignore = ['*__main__*']


def skip_members_hook(app, what, name, obj, skip, options):
    if name.startswith("_") and what == "function":
        skip = True
    if what == "attribute":
        skip = True
    return skip


def setup(sphinx):
    sphinx.connect("autoapi-skip-member", skip_members_hook)


master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"
