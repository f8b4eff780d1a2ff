# -*- coding: utf-8 -*-

"""Greedy Descent in the Logical Space.

Routine Listings
----------------
`greedy_descent`
`is_local_minimum`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["greedy_descent", "is_local_minimum"]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses

import numpy as np
from astropy import log


# PROJECT-SPECIFIC

from ..instances import Instance
from ..utils import STREAMS, make_rng
from ..utils.exceptions import InputError
from ._logical import LogicalSampleSet


##############################################################################
# CODE
##############################################################################


def greedy_descent(
    logical: LogicalSampleSet, instance: Instance, order_seed: int = 0
) -> LogicalSampleSet:
    """Single-spin descent to a 1-flip local minimum.

    Variables are visited in one random order, drawn once from stream
    ``(4,)`` and kept for every pass and every sample. A visit sets
    ``x_a = -sign(sum_b J_ab x_b + h_a)`` and leaves ``x_a`` alone when the
    argument is zero. Passes repeat until one makes no update.

    Parameters
    ----------
    logical : `LogicalSampleSet`
    instance : `~embedding_util.instances.Instance`
    order_seed : int, optional

    Returns
    -------
    `LogicalSampleSet`
        method tagged ``"+GD"``; `gd_updates` counts the applied updates

    Examples
    --------
    >>> from embedding_util.instances import Instance
    >>> inst = Instance.from_couplings(3, {(0, 1): -1.0, (1, 2): -1.0})
    >>> start = LogicalSampleSet([[1, 1, -1]], inst.energies([[1, 1, -1]]), "MV")
    >>> out = greedy_descent(start, inst)
    >>> out.states.tolist(), out.gd_updates.tolist()
    ([[1, 1, 1]], [1])

    """
    if logical.n != instance.n and len(logical):
        raise InputError(
            f"samples have {logical.n} variables, instance {instance.n}"
        )
    order = make_rng(order_seed, STREAMS["descent"]).permutation(instance.n)
    coupling = np.asarray(instance.coupling_matrix)
    x = logical.states.astype(float)
    local = x @ coupling + instance.h  # (S, n)
    updates = np.zeros(len(x), dtype=np.int64)

    passes = 0
    while True:
        passes += 1
        changed = False
        for a in order:
            field = local[:, a]
            flip = np.sign(field) == x[:, a]  # field != 0 here
            if not flip.any():
                continue
            changed = True
            delta = -2.0 * x[flip, a]
            x[flip, a] += delta
            local[flip] += delta[:, None] * coupling[a]
            updates += flip
        if not changed:
            break
    log.debug(
        f"greedy descent: {passes} passes, {updates.sum()} updates "
        f"over {len(x)} samples"
    )

    states = x.astype(np.int8)
    return dataclasses.replace(
        logical,
        states=states,
        energies=instance.energies(states) if len(states) else np.zeros(0),
        method=f"{logical.method}+GD",
        gd_updates=logical.gd_updates + updates,
        provenance=dict(logical.provenance, order_seed=order_seed),
    )


# /def


def is_local_minimum(instance: Instance, states: np.ndarray) -> np.ndarray:
    """Whether no single flip lowers the energy, per state."""
    x = np.asarray(states, dtype=float).reshape(-1, instance.n)
    local = x @ np.asarray(instance.coupling_matrix) + instance.h
    # flipping x_a changes the energy by -2 x_a (sum_b J_ab x_b + h_a)
    return np.all(x * local <= 0, axis=1)


# /def


##############################################################################
# END
