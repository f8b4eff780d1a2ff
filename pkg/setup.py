# -*- coding: utf-8 -*-
# see LICENSE.rst

"""Setup Script.

Metadata, dependencies and the ``embedding-util`` entry point live in
setup.cfg. This script only writes ``embedding_util/version.py``.

Run the tests with ``tox -e test`` or ``pytest``, and build the docs with
``tox -e build_docs``.

"""

##############################################################################
# IMPORTS

import os

from setuptools import setup


##############################################################################
# PARAMETERS

VERSION_TEMPLATE = """
# setuptools_scm may be missing or unable to read the repository,
# in which case the version stamped at build time is used.
try:
    from setuptools_scm import get_version
    version = get_version(root='..', relative_to=__file__)
except Exception:
    version = '{version}'
""".lstrip()


##############################################################################
# CODE
##############################################################################


setup(
    use_scm_version={
        "write_to": os.path.join("embedding_util", "version.py"),
        "write_to_template": VERSION_TEMPLATE,
    },
)


##############################################################################
# END
