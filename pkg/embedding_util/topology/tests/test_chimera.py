# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.topology.chimera`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import itertools

import pytest
import numpy as np


# PROJECT-SPECIFIC

from embedding_util.topology import (
    HORIZONTAL,
    VERTICAL,
    PhysicalGraph,
    build_chimera,
    chimera_coordinate,
    chimera_id,
    subgraph_distance,
)
from embedding_util.utils.exceptions import InputError


##############################################################################
# CODE
##############################################################################


@pytest.mark.parametrize("m", range(1, 17))
def test_counts(m):
    """Qubit and coupler counts of the ideal C_m."""
    g = build_chimera(m)
    assert len(g.qubits) == 8 * m ** 2
    assert len(g.couplers) == 16 * m ** 2 + 8 * m * (m - 1)


# /def


def test_small_examples():
    g = build_chimera(1)
    assert (len(g.qubits), len(g.couplers)) == (8, 16)
    g = build_chimera(2)
    assert (len(g.qubits), len(g.couplers)) == (32, 80)
    assert len(build_chimera(16).qubits) == 2048


# /def


def test_coupler_structure():
    """Intra-cell K44 and same-index shore links only."""
    m = 3
    g = build_chimera(m)
    for i, j in g.couplers:
        assert i < j
        ri, ci, ui, ki = chimera_coordinate(m, i)
        rj, cj, uj, kj = chimera_coordinate(m, j)
        if (ri, ci) == (rj, cj):
            assert ui != uj
        elif ui == uj == VERTICAL:
            assert (ci, ki) == (cj, kj) and abs(ri - rj) == 1
        else:
            assert ui == uj == HORIZONTAL
            assert (ri, ki) == (rj, kj) and abs(ci - cj) == 1


# /def


def test_coordinates_roundtrip():
    m = 4
    for q in range(8 * m * m):
        assert chimera_id(m, *chimera_coordinate(m, q)) == q


# /def


def test_defect_qubit_removes_incident_couplers():
    ideal = build_chimera(2)
    g = build_chimera(2, defect_qubits={5})
    incident = {c for c in ideal.couplers if 5 in c}
    assert 5 not in g.qubits
    assert ideal.couplers - g.couplers == incident
    for i, j in g.couplers:
        assert i in g.qubits and j in g.qubits


# /def


def test_defect_coupler():
    g = build_chimera(1, defect_couplers={(4, 0)})
    assert len(g.couplers) == 15
    assert not g.has_coupler(0, 4)
    assert g.defect_couplers == {(0, 4)}


# /def


def test_defect_out_of_range():
    with pytest.raises(InputError):
        build_chimera(1, defect_qubits={8})
    with pytest.raises(InputError):
        build_chimera(1, defect_couplers={(0, 1)})  # same shore
    with pytest.raises(InputError):
        build_chimera(0)


# /def


def test_immutable_and_roundtrip():
    g = build_chimera(2, defect_qubits={3}, defect_couplers={(0, 4)})
    with pytest.raises(AttributeError):
        g.m = 3
    assert PhysicalGraph.from_dict(g.to_dict()) == g


# /def


# -------------------------------------------------------------------


def test_distance_examples():
    g = build_chimera(2)
    assert subgraph_distance(g, {0}, 0, 0) == 0
    assert subgraph_distance(g, {0, 4}, 0, 4) == 1

    # path of 5 vertical qubits down column 0 of C5
    g5 = build_chimera(5)
    path = [chimera_id(5, r, 0, VERTICAL, 0) for r in range(5)]
    assert subgraph_distance(g5, set(path), path[0], path[-1]) == 4


# /def


def test_distance_disconnected_and_errors():
    g = build_chimera(2)
    assert subgraph_distance(g, {0, 1}, 0, 1) == np.inf
    with pytest.raises(InputError):
        subgraph_distance(g, {0, 4}, 0, 5)
    gd = build_chimera(2, defect_qubits={4})
    with pytest.raises(InputError):
        subgraph_distance(gd, {0, 4}, 0, 0)


# /def


def test_distance_metric_properties():
    g = build_chimera(2)
    subset = {0, 1, 4, 5, 12, 13}  # connected through cell-0 K44
    subset = {q for q in subset if q in g.qubits}
    for i, j, k in itertools.product(sorted(subset), repeat=3):
        dij = subgraph_distance(g, subset, i, j)
        assert dij == subgraph_distance(g, subset, j, i)
        assert dij <= (
            subgraph_distance(g, subset, i, k)
            + subgraph_distance(g, subset, k, j)
        )


# /def


##############################################################################
# END
