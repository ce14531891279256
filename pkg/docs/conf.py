# Sphinx configuration for circulant_transfer_toolbox
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import pathlib

import circulant_transfer_toolbox

project = 'circulant_transfer_toolbox'
copyright = '2026, Circulant Transfer Toolbox Developers'
author = 'Circulant Transfer Toolbox Developers'

# version and release are kept in setup.py

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.mathjax",
    "sphinx_autodoc_typehints",
    "recommonmark"
]

source_suffix = [".rst", ".md"]

templates_path = ['_templates']
exclude_patterns = []

autodoc_member_order = "bysource"

html_theme = "sphinx_rtd_theme"
html_static_path = ['_static']

# README.md is copied in as readme.md with its title replaced
_docs_dir = pathlib.Path(__file__).parent.resolve()
_readme_lines = ["Readme", "======"]
for line in (_docs_dir.parent / "README.md").read_text().split("\n"):
    if line.startswith("# "):
        continue
    _readme_lines.append(line)
(_docs_dir / "readme.md").write_text("\n".join(_readme_lines))
