# -*- coding: utf-8 -*-

"""Physical-to-Logical Mappings.

Routine Listings
----------------
`chain_columns`
`chain_break_fraction`
`map_random`
`map_majority`
`filter_aligned`
`random_logical`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "chain_columns",
    "chain_break_fraction",
    "map_random",
    "map_majority",
    "filter_aligned",
    "random_logical",
]


##############################################################################
# IMPORTS

# GENERAL

import warnings
from typing import List, Tuple

import numpy as np
from astropy import log
from astropy.utils.exceptions import AstropyUserWarning
from scipy import sparse


# PROJECT-SPECIFIC

from ..embedding import Embedding
from ..instances import Instance
from ..sampler import SampleSet
from ..utils import STREAMS, make_rng
from ..utils.decorators import stage
from ..utils.exceptions import EmbeddingError, InputError
from ._logical import LogicalSampleSet


##############################################################################
# CODE
##############################################################################


def chain_columns(sampleset: SampleSet, embedding: Embedding) -> List[np.ndarray]:
    """Sample-array columns of every chain.

    Chain qubits that were not sampled are skipped.

    Raises
    ------
    EmbeddingError
        a chain has no sampled qubit, or a sampled qubit is in no chain

    """
    index = {int(q): k for k, q in enumerate(sampleset.qubits)}
    stray = set(index) - set(embedding.owner)
    if stray:
        raise EmbeddingError(
            f"sampled qubits {sorted(stray)[:5]} belong to no chain"
        )
    out = []
    for a, chain in enumerate(embedding.chains):
        cols = [index[q] for q in chain if q in index]
        if not cols:
            raise EmbeddingError(f"chain {a} has no sampled qubit")
        out.append(np.array(cols, dtype=np.int64))
    return out


# /def


def _chain_sums(
    sampleset: SampleSet, embedding: Embedding
) -> Tuple[List[np.ndarray], np.ndarray, np.ndarray]:
    """Columns, per-sample chain sums (S, n) and chain sizes (n,)."""
    cols = chain_columns(sampleset, embedding)
    sizes = np.array([len(c) for c in cols])
    member = sparse.csr_matrix(
        (
            np.ones(sizes.sum()),
            (np.concatenate(cols), np.repeat(np.arange(len(cols)), sizes)),
        ),
        shape=(len(sampleset.qubits), len(cols)),
    )
    sums = np.asarray((member.T @ sampleset.samples.T.astype(float)).T)
    return cols, sums.astype(np.int64), sizes


# /def


def chain_break_fraction(sampleset: SampleSet, embedding: Embedding) -> np.ndarray:
    """Fraction of chains that are not unanimous, per sample."""
    _, sums, sizes = _chain_sums(sampleset, embedding)
    return np.mean(np.abs(sums) != sizes, axis=1)


# /def


def _logical(instance, states, method, aligned, sampleset, embedding, **prov):
    if states.shape[1] != instance.n:
        raise InputError(
            f"embedding has {states.shape[1]} chains, instance {instance.n} variables"
        )
    provenance = dict(
        instance=instance.id,
        problem=sampleset.problem_id,
        embedding=embedding.id,
        num_reads=len(sampleset),
        **prov,
    )
    return LogicalSampleSet(
        states=states,
        energies=instance.energies(states),
        method=method,
        aligned=aligned,
        provenance=provenance,
    )


# /def


# ------------------------------------------------------------------------


@stage(name="map")
def map_random(
    sampleset: SampleSet,
    embedding: Embedding,
    instance: Instance,
    seed: int = 0,
) -> LogicalSampleSet:
    """Read each chain from one uniformly chosen qubit (R).

    Parameters
    ----------
    sampleset : `~embedding_util.sampler.SampleSet`
    embedding : `~embedding_util.embedding.Embedding`
    instance : `~embedding_util.instances.Instance`
        for the logical energies
    seed : int, optional
        draws from stream ``(3,)``

    Returns
    -------
    `LogicalSampleSet`
        method "R"

    """
    cols, sums, sizes = _chain_sums(sampleset, embedding)
    padded = np.zeros((len(cols), sizes.max()), dtype=np.int64)
    for a, c in enumerate(cols):
        padded[a, : len(c)] = c

    rng = make_rng(seed, STREAMS["mapping"])
    pick = rng.integers(0, sizes, size=sums.shape)
    chosen = padded[np.arange(len(cols)), pick]
    states = np.take_along_axis(sampleset.samples, chosen, axis=1)
    return _logical(
        instance,
        states,
        "R",
        np.all(np.abs(sums) == sizes, axis=1),
        sampleset,
        embedding,
        seed=seed,
    )


# /def


@stage(name="map")
def map_majority(
    sampleset: SampleSet,
    embedding: Embedding,
    instance: Instance,
    seed: int = 0,
) -> LogicalSampleSet:
    """Majority vote over each chain (MV); ties are broken uniformly.

    Returns
    -------
    `LogicalSampleSet`
        method "MV"

    """
    _, sums, sizes = _chain_sums(sampleset, embedding)
    rng = make_rng(seed, STREAMS["mapping"])
    coin = rng.choice(np.array([-1, 1]), size=sums.shape)
    states = np.where(sums == 0, coin, np.sign(sums))
    return _logical(
        instance,
        states,
        "MV",
        np.all(np.abs(sums) == sizes, axis=1),
        sampleset,
        embedding,
        seed=seed,
    )


# /def


@stage(name="map")
def filter_aligned(
    sampleset: SampleSet, embedding: Embedding, instance: Instance
) -> LogicalSampleSet:
    """Keep only reads whose every chain is unanimous (A).

    Returns
    -------
    `LogicalSampleSet`
        method "A", possibly empty

    """
    _, sums, sizes = _chain_sums(sampleset, embedding)
    keep = np.all(np.abs(sums) == sizes, axis=1)
    if not keep.any():
        warnings.warn("no chain-aligned reads, empty sample set", AstropyUserWarning)
    log.debug(f"{keep.sum()} of {len(keep)} reads are chain-aligned")
    return _logical(
        instance,
        np.sign(sums[keep]).reshape(-1, sums.shape[1]),
        "A",
        keep[keep],
        sampleset,
        embedding,
    )


# /def


def random_logical(
    instance: Instance, num_samples: int, seed: int = 0
) -> LogicalSampleSet:
    """Uniformly random logical states, the baseline fed to greedy descent.

    Draws from stream ``(5,)``.

    """
    if num_samples < 0:
        raise InputError(f"num_samples must be non-negative, not {num_samples}")
    rng = make_rng(seed, STREAMS["random_logical"])
    states = rng.choice(
        np.array([-1, 1], dtype=np.int8), size=(num_samples, instance.n)
    )
    return LogicalSampleSet(
        states=states,
        energies=instance.energies(states) if num_samples else np.zeros(0),
        method="rand",
        provenance=dict(instance=instance.id, seed=seed),
    )


# /def


##############################################################################
# END
