# -*- coding: utf-8 -*-
# Licensed under a 3-clause BSD style license - see LICENSE.rst

"""Sphinx configuration for the embedding_util documentation.

Built on ``sphinx_astropy.conf.v1``; project metadata is read from the
``[metadata]`` section of setup.cfg.

"""

##############################################################################
# IMPORTS

import datetime
import os
import sys
from configparser import ConfigParser
from importlib import import_module

try:
    from sphinx_astropy.conf.v1 import *  # noqa
except ImportError:
    print("ERROR: the documentation requires the sphinx-astropy package")
    sys.exit(1)


##############################################################################
# PARAMETERS

setup_cfg = ConfigParser()
setup_cfg.read([os.path.join(os.path.dirname(__file__), "..", "setup.cfg")])
setup_cfg = dict(setup_cfg.items("metadata"))


##############################################################################
# GENERAL

highlight_language = "python3"
exclude_patterns.append("_templates")  # noqa: F405

intersphinx_mapping.update(  # noqa: F405
    {
        "scipy": ("https://docs.scipy.org/doc/scipy/reference", None),
        "networkx": ("https://networkx.org/documentation/stable", None),
        "dwave_networkx": (
            "https://docs.ocean.dwavesys.com/en/stable",
            None,
        ),
    }
)

modindex_common_prefix = ["embedding_util."]

extensions += ["sphinx_automodapi.smart_resolver"]  # noqa: F405
automodsumm_inherited_members = True


##############################################################################
# PROJECT

project = setup_cfg["name"]
author = setup_cfg["author"]
copyright = f"{datetime.datetime.now().year}, {author}"

import_module(project)
package = sys.modules[project]

version = package.__version__.split("-", 1)[0]
release = package.__version__


##############################################################################
# OUTPUT

html_theme_options = {
    "logotext1": "embedding",  # white,  semi-bold
    "logotext2": "_util",  # orange, light
    "logotext3": ":docs",  # white,  light
}
html_title = f"{project} v{release}"
htmlhelp_basename = project + "doc"

latex_documents = [
    ("index", project + ".tex", project + " Documentation", author, "manual")
]
man_pages = [("index", project.lower(), project + " Documentation", [author], 1)]

if setup_cfg.get("edit_on_github", "false").lower() == "true":
    extensions += ["sphinx_astropy.ext.edit_on_github"]  # noqa: F405
    edit_on_github_project = setup_cfg["github_project"]
    edit_on_github_branch = "main"
    edit_on_github_source_root = ""
    edit_on_github_doc_root = "docs"

github_issues_url = (
    f"https://github.com/{setup_cfg['github_project']}/issues/"
)


##############################################################################
# END
