# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.embedding`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import pytest


# PROJECT-SPECIFIC

from embedding_util.embedding import (
    ChainPair,
    Embedding,
    chain_pair,
    connecting_couplers,
    coupler_count_histogram,
    embed_biclique,
    embed_clique,
    embed_cubic,
    validate,
)
from embedding_util.instances import Instance, gen_3dsg, gen_bsg, gen_csg
from embedding_util.topology import build_chimera
from embedding_util.utils.exceptions import EmbeddingError, InputError


##############################################################################
# PARAMETERS

C8 = build_chimera(8)


##############################################################################
# CODE
##############################################################################


@pytest.mark.parametrize("n, length", [(4, 2), (8, 3), (32, 9), (64, 17)])
def test_clique_chain_lengths(n, length):
    graph = C8 if n <= 32 else build_chimera(16)
    emb = embed_clique(n, graph)
    assert len(emb) == n
    assert set(emb.chain_lengths) == {length}


# /def


def test_clique_single_cell():
    emb = embed_clique(4, build_chimera(1))
    assert emb.chain_length == 2
    report = validate(emb, gen_csg(4, 0), build_chimera(1))
    assert report.passed


# /def


def test_clique_too_large():
    with pytest.raises(InputError):
        embed_clique(8, build_chimera(1))
    with pytest.raises(InputError):
        embed_clique(0, C8)


# /def


@pytest.mark.parametrize("n", [5, 17, 32])
def test_clique_validates(n):
    emb = embed_clique(n, C8)
    report = validate(emb, gen_csg(n, 1), C8)
    assert report.passed, report.failures()
    assert set(report.coupler_counts.values()) <= {1, 2}


# /def


def test_clique_coupler_histogram():
    """Pairs inside a group of four meet twice, all other pairs once."""
    report = validate(embed_clique(32, C8), gen_csg(32, 1), C8)
    hist = coupler_count_histogram(report)
    assert hist == {2: 8 * 6, 1: 32 * 31 // 2 - 8 * 6}


# /def


def test_clique_defect_is_reported():
    used = embed_clique(32, C8).chains[0][0]
    damaged = build_chimera(8, defect_qubits=[used])
    with pytest.raises(EmbeddingError):
        embed_clique(32, damaged)


# /def


# -------------------------------------------------------------------


def test_biclique():
    emb = embed_biclique(64, C8)
    assert set(emb.chain_lengths) == {8}
    report = validate(emb, gen_bsg(64, 0), C8)
    assert report.passed
    assert coupler_count_histogram(report) == {1: 32 * 32}

    small = build_chimera(1)
    assert set(embed_biclique(8, small).chain_lengths) == {1}
    assert validate(embed_biclique(8, small), gen_bsg(8, 0), small).passed

    two = build_chimera(2)
    assert set(embed_biclique(16, two).chain_lengths) == {2}

    with pytest.raises(InputError):
        embed_biclique(7, C8)
    with pytest.raises(InputError):
        embed_biclique(24, two)


# /def


def test_cubic():
    emb = embed_cubic((4, 4, 4), C8)
    assert set(emb.chain_lengths) == {4}
    report = validate(emb, gen_3dsg((4, 4, 4), 0), C8)
    assert report.passed
    # lateral links meet once, vertical z links twice
    assert coupler_count_histogram(report) == {1: 96, 2: 48}

    tiny = build_chimera(2)
    assert validate(embed_cubic((1, 1, 1), tiny), gen_3dsg((1, 1, 1), 0), tiny).passed
    assert validate(embed_cubic((1, 1, 8), tiny), gen_3dsg((1, 1, 8), 0), tiny).passed

    with pytest.raises(InputError):
        embed_cubic((1, 1, 1), build_chimera(1))
    with pytest.raises(InputError):
        embed_cubic((1, 1, 9), tiny)


# /def


def test_embeddings_deterministic():
    assert embed_clique(20, C8) == embed_clique(20, C8)
    assert embed_cubic((2, 3, 5), C8).id == embed_cubic((2, 3, 5), C8).id


# /def


# -------------------------------------------------------------------


def test_validate_failures():
    c1 = build_chimera(1)
    inst = Instance.from_couplings(2, {(0, 1): 1.0})

    shared = validate(Embedding([[0, 4], [4, 1]]), inst, c1)
    assert not shared.disjoint and not shared.passed
    assert shared.overlaps == {4: (0, 1)}

    # qubits 0 and 1 are both vertical and never coupled
    apart = validate(Embedding([[0], [1]]), inst, c1)
    assert apart.uncovered == ((0, 1),)
    assert not apart.passed

    broken = validate(Embedding([[0, 1], [4]]), inst, c1)
    assert broken.disconnected == (0,)
    assert "connectedness" in broken.failures()[0]

    dead = build_chimera(1, defect_qubits=[4])
    report = validate(Embedding([[0], [4]]), inst, dead)
    assert not report.live_ok

    assert not validate(Embedding([[0]]), inst, c1).size_ok


# /def


def test_connecting_couplers_orientation():
    emb = Embedding([[0], [4, 1]])
    c1 = build_chimera(1)
    assert connecting_couplers(emb, c1, 0, 1) == ((0, 4),)
    assert connecting_couplers(emb, c1, 1, 0) == ((4, 0),)


# /def


def test_embedding_dict_roundtrip():
    emb = embed_cubic((2, 2, 2), C8)
    again = Embedding.from_dict(emb.to_dict())
    assert again == emb
    assert again.id == emb.id


# /def


# ------------------------------------------------------------------------


def test_chain_pair_key_is_canonical():
    one = ChainPair(5, 3, ((0, 2),))
    other = ChainPair(3, 5, ((0, 4),))
    assert one.key == other.key == (3, 5, ((0, 0),))
    assert one.label == "3x5:0-0"
    assert ChainPair(5, 5, ((2, 2),)).key != ChainPair(5, 5, ((1, 1),)).key


# /def


def test_chain_pair_validation():
    with pytest.raises(InputError):
        ChainPair(2, 2, ((2, 0),))
    with pytest.raises(InputError):
        ChainPair(2, 2, ())
    with pytest.raises(InputError):
        ChainPair(0, 2, ((0, 0),))


# /def


def test_chain_pair_from_clique():
    emb = embed_clique(8, C8)
    inter = connecting_couplers(emb, C8, 0, 5)
    pair = chain_pair(emb, C8, 0, 5)
    assert pair.is_path
    assert pair.num_qubits == 6
    assert len(pair.links) == len(inter)

    g = pair.graph()
    assert g.number_of_nodes() == 6
    assert g.number_of_edges() == 2 + 2 + len(inter)


# /def


def test_chain_pair_needs_coupler():
    with pytest.raises(EmbeddingError):
        chain_pair(Embedding([[0], [1]]), build_chimera(1), 0, 1)


# /def


##############################################################################
# END
