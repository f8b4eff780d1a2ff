# -*- coding: utf-8 -*-

"""Stage-file persistence.

Every file the package writes is self-describing: JSON documents carry a
``schema`` name, a ``schema_version`` and a content ``id``; tables are CSV
with a JSON metadata sidecar of the same stem.

Routine Listings
----------------
`content_id`
`atomic_write`
`write_json`
`read_json`
`write_table`
`read_table`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "SCHEMA_VERSION",
    "content_id",
    "atomic_write",
    "write_json",
    "read_json",
    "write_table",
    "read_table",
]


##############################################################################
# IMPORTS

# GENERAL

import hashlib
import json
import os
import pathlib
import tempfile
from typing import Any, Dict, Optional, Union

import numpy as np
from astropy.table import Table


# PROJECT-SPECIFIC

from .exceptions import ConfigError


##############################################################################
# PARAMETERS

SCHEMA_VERSION = 1

_PathLike = Union[str, os.PathLike]


##############################################################################
# CODE
##############################################################################


def _default(obj: Any):
    """JSON fallback for numpy scalars and arrays."""
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"{type(obj)} is not JSON serializable")


# /def


def content_id(payload: Dict[str, Any]) -> str:
    """Short sha256 of the canonical JSON encoding of `payload`.

    Keys named ``id`` are excluded so the id is stable under re-stamping.

    """
    body = {k: v for k, v in payload.items() if k != "id"}
    text = json.dumps(body, sort_keys=True, default=_default)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


# /def


# ------------------------------------------------------------------------


def atomic_write(path: _PathLike, text: str) -> pathlib.Path:
    """Write `text` to `path` via a temporary file and rename."""
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise

    return path


# /def


def write_json(
    path: _PathLike, schema: str, payload: Dict[str, Any]
) -> pathlib.Path:
    """Write a schema-stamped JSON stage file.

    Parameters
    ----------
    path : path-like
    schema : str
        document kind, e.g. "instance", "embedding"
    payload : dict
        JSON-able content; numpy types are converted.

    Returns
    -------
    path : `~pathlib.Path`

    """
    doc = {
        "schema": f"embedding_util/{schema}",
        "schema_version": SCHEMA_VERSION,
        **payload,
    }
    doc["id"] = payload.get("id") or content_id(doc)
    text = json.dumps(doc, indent=1, default=_default)
    return atomic_write(path, text + "\n")


# /def


def read_json(path: _PathLike, schema: Optional[str] = None) -> Dict[str, Any]:
    """Read a JSON stage file, checking its schema stamp.

    Raises
    ------
    ConfigError
        unreadable file, bad JSON, or wrong schema / version

    """
    path = pathlib.Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as e:
        raise ConfigError(f"cannot read file ({e.strerror})", str(path))
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON ({e.msg}, line {e.lineno})", str(path))

    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object", str(path))

    if schema is not None:
        expected = f"embedding_util/{schema}"
        if doc.get("schema") != expected:
            raise ConfigError(
                f"expected schema {expected!r}, found {doc.get('schema')!r}",
                str(path),
            )
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ConfigError(
                f"unsupported schema_version {doc.get('schema_version')!r}",
                str(path),
            )

    return doc


# /def


# ------------------------------------------------------------------------


def write_table(
    path: _PathLike, table: Table, meta: Optional[Dict[str, Any]] = None
) -> pathlib.Path:
    """Write `table` as CSV with a ``.json`` metadata sidecar.

    Parameters
    ----------
    path : path-like
        the CSV file; the sidecar replaces the suffix with ``.json``.
    table : `~astropy.table.Table`
    meta : dict, optional
        merged over ``table.meta`` into the sidecar.

    """
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp = tempfile.mkstemp(
        dir=path.parent, prefix=f".{path.name}.", suffix=".csv"
    )
    os.close(fd)
    try:
        table.write(tmp, format="ascii.csv", overwrite=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise

    sidecar = dict(table.meta)
    sidecar.update(meta or {})
    sidecar["columns"] = list(table.colnames)
    sidecar["rows"] = len(table)
    write_json(path.with_suffix(".json"), "table", sidecar)

    return path


# /def


def read_table(path: _PathLike) -> Table:
    """Read a CSV table and attach its sidecar metadata."""
    path = pathlib.Path(path)
    table = Table.read(path, format="ascii.csv")
    sidecar = path.with_suffix(".json")
    if sidecar.exists():
        table.meta.update(read_json(sidecar, "table"))

    return table


# /def


##############################################################################
# END
