# -*- coding: utf-8 -*-
# see LICENSE.rst

"""Data Management.

Reference values for the generated embeddings and the experiment presets
shipped with the package.

Routine Listings
----------------
`table2`
`expected_layout`
`preset_names`
`load_preset`

"""

__author__ = "Nathaniel Starkman"


__all__ = ["table2", "expected_layout", "preset_names", "load_preset"]


###############################################################################
# IMPORTS

# GENERAL

import json
import pathlib
from typing import Any, Dict, List, Optional

from astropy.table import Table
from astropy.utils.data import get_pkg_data_filename, get_pkg_data_filenames


# PROJECT-SPECIFIC

from ..utils.exceptions import ConfigError


###############################################################################
# CODE
###############################################################################


def table2() -> Table:
    """Chain lengths and pattern-class counts of the reference embeddings.

    Returns
    -------
    `~astropy.table.Table`
        columns ``embedding``, ``n``, ``m`` (Chimera size),
        ``chain_length`` and ``pattern_classes``

    Examples
    --------
    >>> t = table2()
    >>> list(t["pattern_classes"])
    [18, 51, 10, 3]

    """
    path = get_pkg_data_filename("table2.csv", package="embedding_util.data")
    return Table.read(path, format="ascii.csv")


# /def


def expected_layout(kind: str, n: int) -> Optional[Dict[str, int]]:
    """The `table2` row for an embedding kind and size, if there is one."""
    for row in table2():
        if row["embedding"] == kind and row["n"] == n:
            return dict(
                m=int(row["m"]),
                chain_length=int(row["chain_length"]),
                pattern_classes=int(row["pattern_classes"]),
            )
    return None


# /def


# ------------------------------------------------------------------------


def _preset_paths() -> Dict[str, pathlib.Path]:
    paths = get_pkg_data_filenames(
        "presets", package="embedding_util.data", pattern="*.json"
    )
    return {pathlib.Path(p).stem: pathlib.Path(p) for p in paths}


# /def


def preset_names() -> List[str]:
    """Names of the shipped experiment presets.

    Examples
    --------
    >>> preset_names()  # doctest: +NORMALIZE_WHITESPACE
    ['anneal-time-sweep', 'chain-strength-sweep', 'eaee-xi-sweep',
     'mapping-comparison']

    """
    return sorted(_preset_paths())


# /def


def load_preset(name: str) -> Dict[str, Any]:
    """Experiment configuration document of a preset.

    Raises
    ------
    ConfigError
        unknown preset

    """
    paths = _preset_paths()
    if name not in paths:
        raise ConfigError(
            f"unknown preset {name!r}, choose from {sorted(paths)}", "preset"
        )
    return json.loads(paths[name].read_text())


# /def


###############################################################################
# END
