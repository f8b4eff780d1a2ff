# -*- coding: utf-8 -*-

"""Chain Susceptibilities.

A chain responds to a perturbation at one of its qubits with a
correlation that decays exponentially in within-chain distance, with
decay length ``xi``. These functions turn that model into single-chain
and pairwise-logical susceptibilities.

Routine Listings
----------------
`chain_distances`
`chi_chain`
`chi_pair`
`chi_pair_summed`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "chain_distances",
    "chi_chain",
    "chi_pair",
    "chi_pair_summed",
]


##############################################################################
# IMPORTS

# GENERAL

import functools
from typing import Tuple

import networkx as nx
import numpy as np
from scipy.special import logsumexp


# PROJECT-SPECIFIC

from ..embedding import Embedding, connecting_couplers
from ..topology import PhysicalGraph
from ..utils.exceptions import EmbeddingError, InputError


##############################################################################
# CODE
##############################################################################


@functools.lru_cache(maxsize=16)
def chain_distances(
    embedding: Embedding, graph: PhysicalGraph
) -> Tuple[np.ndarray, ...]:
    """All-pairs within-chain distances, one (L, L) array per chain.

    Distances are shortest paths in the subgraph induced by the chain,
    rows and columns in stored chain order.

    Raises
    ------
    EmbeddingError
        a chain is disconnected or uses dead qubits

    """
    out = []
    for a, chain in enumerate(embedding.chains):
        if not set(chain) <= graph.qubits:
            raise EmbeddingError(f"chain {a} uses dead qubits")
        dist = np.asarray(
            nx.floyd_warshall_numpy(graph.graph.subgraph(chain), nodelist=chain)
        )
        if not np.all(np.isfinite(dist)):
            raise EmbeddingError(f"chain {a} is disconnected")
        dist.setflags(write=False)
        out.append(dist)
    return tuple(out)


# /def


def _check_xi(xi: float) -> float:
    xi = float(xi)
    if not xi > 0:
        raise InputError(f"xi must be positive, not {xi}")
    return xi


# /def


# ------------------------------------------------------------------------


def chi_chain(
    embedding: Embedding, graph: PhysicalGraph, a: int, i: int, xi: float
) -> float:
    """Susceptibility of chain `a` to a perturbation at its qubit `i`.

    ``chi = prod_k exp(-d(i, k) / (xi L))`` over the chain's qubits k.

    Parameters
    ----------
    embedding : `~embedding_util.embedding.Embedding`
    graph : `~embedding_util.topology.PhysicalGraph`
    a : int
        variable
    i : int
        position of the qubit within chain `a`
    xi : float
        correlation length, `numpy.inf` allowed

    Examples
    --------
    >>> import numpy as np
    >>> from embedding_util.embedding import Embedding
    >>> from embedding_util.topology import build_chimera
    >>> g = build_chimera(3)
    >>> emb = Embedding([[0, 24, 48]])  # three vertical qubits in a column
    >>> bool(np.isclose(chi_chain(emb, g, 0, 0, 3.0), np.exp(-1 / 3)))
    True

    """
    xi = _check_xi(xi)
    dist = chain_distances(embedding, graph)[a]
    return float(np.exp(-dist[i].mean() / xi))


# /def


def _positions(embedding, graph, a, b):
    cps = connecting_couplers(embedding, graph, a, b)
    if not cps:
        raise EmbeddingError(f"chains {a} and {b} share no coupler")
    pos = embedding.position
    pi = np.array([pos[i] for i, _ in cps])
    pj = np.array([pos[j] for _, j in cps])
    return pi, pj


# /def


def chi_pair(
    embedding: Embedding, graph: PhysicalGraph, a: int, b: int, xi: float
) -> float:
    """Pairwise-logical susceptibility of chains `a` and `b`.

    For every qubit pair ``(i in C_a, j in C_b)`` the bracket is the mean
    over connecting couplers ``(i', j')`` of
    ``exp(-(d_a(i, i') + d_b(j, j')) / xi)``; the result is the geometric
    mean of the brackets over all ``|C_a| |C_b|`` pairs.

    Parameters
    ----------
    embedding : `~embedding_util.embedding.Embedding`
    graph : `~embedding_util.topology.PhysicalGraph`
    a, b : int
        distinct variables with at least one connecting coupler
    xi : float
        correlation length; ``numpy.inf`` gives exactly 1

    Returns
    -------
    chi : float
        in (0, 1]

    Raises
    ------
    EmbeddingError
        no connecting coupler or a disconnected chain

    """
    xi = _check_xi(xi)
    if a == b:
        raise InputError("chi_pair needs two distinct chains")
    pi, pj = _positions(embedding, graph, a, b)
    dists = chain_distances(embedding, graph)
    da = dists[a][:, pi]  # (La, K)
    db = dists[b][:, pj]  # (Lb, K)

    if np.isinf(xi):
        return 1.0

    # log of the per-(i, j) bracket, averaged in log space
    expo = -(da[:, None, :] + db[None, :, :]) / xi
    log_bracket = logsumexp(expo, axis=-1) - np.log(len(pi))
    return float(np.exp(log_bracket.mean()))


# /def


def chi_pair_summed(
    embedding: Embedding, graph: PhysicalGraph, a: int, b: int, xi: float
) -> float:
    """Factorized pairwise susceptibility ``sum_couplers chi_a^i chi_b^j``.

    Equals :func:`chi_pair` when the chains share a single coupler; with
    several couplers it sums path contributions instead of averaging
    them inside the geometric mean, and can exceed 1.

    """
    xi = _check_xi(xi)
    pi, pj = _positions(embedding, graph, a, b)
    return float(
        sum(
            chi_chain(embedding, graph, a, i, xi)
            * chi_chain(embedding, graph, b, j, xi)
            for i, j in zip(pi, pj)
        )
    )


# /def


##############################################################################
# END
