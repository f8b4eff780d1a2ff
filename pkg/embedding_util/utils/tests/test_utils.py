# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.utils`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import json

import pytest
import numpy as np
from astropy.table import Table


# PROJECT-SPECIFIC

from embedding_util.utils import (
    STREAMS,
    as_spin_array,
    geometric_mean,
    make_rng,
    spin_energies,
)
from embedding_util.utils import io
from embedding_util.utils.decorators import stage
from embedding_util.utils.exceptions import ConfigError, InputError


##############################################################################
# CODE
##############################################################################


def test_make_rng_streams():
    a = make_rng(3, STREAMS["noise"]).random(5)
    b = make_rng(3, STREAMS["noise"]).random(5)
    c = make_rng(3, STREAMS["sampler"]).random(5)
    d = make_rng(3, STREAMS["sampler"], 1).random(5)

    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(c, d)

    with pytest.raises(InputError):
        make_rng(-1)
    with pytest.raises(InputError):
        make_rng(0, -2)


# /def


def test_geometric_mean():
    assert geometric_mean([2.0, 8.0]) == pytest.approx(4.0)
    with pytest.raises(InputError):
        geometric_mean([])
    with pytest.raises(InputError):
        geometric_mean([1.0, 0.0])


# /def


def test_as_spin_array():
    x = as_spin_array([1, -1, 1], 3)
    assert x.dtype == np.int8

    batch = as_spin_array([1, -1, 1], 3, ndim=2)
    assert batch.shape == (1, 3)

    with pytest.raises(InputError, match="length 4"):
        as_spin_array([1, -1, 1], 4)
    with pytest.raises(InputError, match="-1 or \\+1"):
        as_spin_array([1, 0, 1], 3)


# /def


def test_spin_energies():
    h = np.array([0.5, 0.0, -1.0])
    pairs = np.array([[0, 1], [1, 2]])
    j = np.array([1.0, -0.25])
    z = np.array([[1, 1, 1], [1, -1, -1], [-1, -1, 1]])
    assert spin_energies(z, h, pairs, j).tolist() == [0.25, 0.25, -0.25]

    # fields only
    empty = spin_energies(z, h, np.zeros((0, 2), dtype=int), [])
    assert empty.tolist() == [-0.5, 1.5, -1.5]


# /def


# ------------------------------------------------------------------------


def test_stage_tags_errors():
    @stage(name="compile")
    def boom():
        raise InputError("bad")

    @stage
    def fine(x):
        return 2 * x

    with pytest.raises(InputError) as exc:
        boom()
    assert exc.value.stage == "compile"
    assert fine(3) == 6
    assert fine.__wrapped__(3) == 6


# /def


def test_config_error_path():
    err = ConfigError("must be positive", "ensemble.n")
    assert err.path == "ensemble.n"
    assert str(err) == "ensemble.n: must be positive"
    assert str(ConfigError("plain")) == "plain"


# /def


# ------------------------------------------------------------------------


def test_json_stage_files(tmp_path):
    path = io.write_json(tmp_path / "x.json", "instance", dict(n=np.int64(3)))
    doc = io.read_json(path, "instance")
    assert doc["n"] == 3
    assert doc["schema_version"] == io.SCHEMA_VERSION
    assert doc["id"] == io.content_id(doc)
    assert not list(tmp_path.glob(".x.json.*"))

    with pytest.raises(ConfigError, match="expected schema"):
        io.read_json(path, "embedding")

    (tmp_path / "bad.json").write_text("[1, 2")
    with pytest.raises(ConfigError, match="invalid JSON"):
        io.read_json(tmp_path / "bad.json")

    with pytest.raises(ConfigError, match="cannot read"):
        io.read_json(tmp_path / "missing.json")


# /def


def test_content_id_ignores_id_and_order():
    a = io.content_id(dict(a=1, b=[1, 2]))
    b = io.content_id(dict(b=[1, 2], a=1, id="whatever"))
    assert a == b
    assert a != io.content_id(dict(a=2, b=[1, 2]))


# /def


def test_table_sidecar(tmp_path):
    table = Table(dict(k=[1, 2], v=[0.5, 1.5]), meta=dict(name="t"))
    path = io.write_table(tmp_path / "t.csv", table, meta=dict(extra=1))

    back = io.read_table(path)
    assert list(back["k"]) == [1, 2]
    assert back.meta["name"] == "t"
    assert back.meta["extra"] == 1
    assert back.meta["rows"] == 2

    sidecar = json.loads((tmp_path / "t.json").read_text())
    assert sidecar["schema"] == "embedding_util/table"


# /def


##############################################################################
# END
