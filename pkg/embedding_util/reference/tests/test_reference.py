# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.reference`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import pytest
import numpy as np
from numpy.testing import assert_allclose


# PROJECT-SPECIFIC

from embedding_util import conf
from embedding_util.compiler import chi_chain, chi_pair, chi_pair_summed
from embedding_util.embedding import ChainPair, Embedding, chain_pair
from embedding_util.instances import Instance, gen_csg
from embedding_util.reference import (
    brute_min,
    chain_gibbs_correlations,
    chain_xi,
    gibbs_correlations,
    spin_states,
    two_chain_gibbs_correlations,
)
from embedding_util.topology import build_chimera
from embedding_util.utils import geometric_mean
from embedding_util.utils.exceptions import SizeCapError


##############################################################################
# PARAMETERS

C8 = build_chimera(8)

# vertical chain down column 0 of C8, index 0
COLUMN = [64 * r for r in range(8)]


def _path(length):
    return [(k, k + 1) for k in range(length - 1)]


# /def


##############################################################################
# CODE
##############################################################################


def test_brute_min_two_spins():
    res = brute_min(Instance.from_couplings(2, {(0, 1): 1.0}))
    assert res.energy == -1.0
    assert res.num_minima == 2
    assert {tuple(s) for s in res.states} == {(1, -1), (-1, 1)}


# /def


def test_brute_min_single_field():
    res = brute_min(Instance.from_couplings(1, {}, h=[-1.0]))
    assert res.energy == -1.0
    assert res.states.tolist() == [[1]]


# /def


def test_brute_min_matches_full_scan():
    inst = gen_csg(10, 5)
    energies = inst.energies(spin_states(10, 0, 2 ** 10))
    res = brute_min(inst)
    assert res.energy == pytest.approx(energies.min(), abs=1e-12)
    for state in res.states:
        assert inst.energy(state) == pytest.approx(res.energy, abs=1e-9)
        assert inst.energy(-state) == pytest.approx(res.energy, abs=1e-9)


# /def


def test_brute_min_with_fields_and_chunks(monkeypatch):
    from embedding_util.reference import enumeration

    monkeypatch.setattr(enumeration, "CHUNK", 64)
    rng = np.random.default_rng(3)
    inst = Instance.from_couplings(
        9, {(a, a + 1): rng.normal() for a in range(8)}, h=rng.normal(size=9)
    )
    energies = inst.energies(spin_states(9, 0, 2 ** 9))
    res = brute_min(inst)
    assert res.energy == pytest.approx(energies.min(), abs=1e-12)
    assert res.num_minima == 1


# /def


def test_brute_min_cap():
    with conf.set_temp("brute_force_cap", 4):
        with pytest.raises(SizeCapError):
            brute_min(gen_csg(5, 0))


# /def


def test_brute_min_correlations():
    res = brute_min(Instance.from_couplings(3, {(0, 1): -1.0}), beta=0.5)
    assert_allclose(np.diag(res.correlations), 1.0)
    assert res.correlations[0, 1] == pytest.approx(np.tanh(0.5), rel=1e-12)
    assert res.correlations[0, 2] == pytest.approx(0.0, abs=1e-12)


# /def


# ------------------------------------------------------------------------


@pytest.mark.parametrize("length", range(2, 9))
@pytest.mark.parametrize("coupling", [0.3, 0.5, 1.0])
def test_chain_correlations_are_powers_of_tanh(length, coupling):
    corr = chain_gibbs_correlations(length, 1.0, coupling)
    dist = np.abs(np.subtract.outer(np.arange(length), np.arange(length)))
    assert_allclose(corr, np.tanh(coupling) ** dist, rtol=1e-10, atol=1e-14)


# /def


def test_transfer_matrix_matches_enumeration():
    for length in (3, 8, 12):
        exact = gibbs_correlations(length, _path(length), [-1.0] * (length - 1), 0.5)
        assert_allclose(
            chain_gibbs_correlations(length, 0.5, 1.0), exact, atol=1e-12
        )


# /def


@pytest.mark.parametrize("coupling", [0.3, 0.5, 1.0])
def test_chain_susceptibility_is_geometric_mean_of_correlations(coupling):
    corr = chain_gibbs_correlations(8, 1.0, coupling)
    xi = chain_xi(1.0, coupling)
    emb = Embedding([COLUMN])
    for i in range(8):
        assert chi_chain(emb, C8, 0, i, xi) == pytest.approx(
            geometric_mean(corr[i]), rel=1e-10
        )


# /def


def test_two_chain_weak_coupling_limit():
    beta, lam, coupling = 1.0, 0.5, -1e-4
    pair = ChainPair(4, 3, ((3, 0),))
    c_ab, block = two_chain_gibbs_correlations(pair, beta, lam, coupling)
    assert block.shape == (4, 3)
    assert c_ab > 0

    xi = chain_xi(beta, lam)
    mean_a = np.abs(np.arange(4) - 3).mean()
    mean_b = np.abs(np.arange(3) - 0).mean()
    predicted = np.exp(-(mean_a + mean_b) / xi)
    assert c_ab / np.tanh(beta * abs(coupling)) == pytest.approx(predicted, rel=1e-3)


# /def


def test_two_coupler_correlation_matches_geometric_mean_form():
    # chains (0, 4) and (1, 5) in one cell share couplers 0-5 and 4-1
    graph = build_chimera(1)
    emb = Embedding([[0, 4], [1, 5]])
    pair = chain_pair(emb, graph, 0, 1)
    assert len(pair.links) == 2

    beta, lam, coupling = 1.0, 0.5, -1e-4
    c_ab, _ = two_chain_gibbs_correlations(pair, beta, lam, coupling)
    measured = c_ab / np.tanh(beta * abs(coupling))
    xi = chain_xi(beta, lam)
    t = np.tanh(beta * lam)

    assert measured == pytest.approx(np.sqrt(t * (1 + t ** 2) / 2), rel=1e-3)
    assert measured == pytest.approx(chi_pair(emb, graph, 0, 1, xi), rel=1e-3)
    # the summed form double counts the two paths
    assert chi_pair_summed(emb, graph, 0, 1, xi) == pytest.approx(2 * t)
    assert chi_pair_summed(emb, graph, 0, 1, xi) > 1.5 * measured


# /def


def test_two_chain_uncoupled():
    c_ab, block = two_chain_gibbs_correlations(
        ChainPair(2, 2, ((0, 0),)), 1.0, 1.0, 0.0
    )
    assert c_ab == 0.0
    assert not block.any()


# /def


def test_antiferromagnetic_link_anticorrelates():
    c_ab, _ = two_chain_gibbs_correlations(
        ChainPair(2, 2, ((0, 0), (1, 1))), 1.0, 1.0, 0.5
    )
    assert c_ab < 0


# /def


##############################################################################
# END
