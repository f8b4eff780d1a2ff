# -*- coding: utf-8 -*-

"""Exhaustive-Enumeration Oracles.

Routine Listings
----------------
`OracleResult`
`spin_states`
`brute_min`
`gibbs_correlations`
`two_chain_gibbs_correlations`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "OracleResult",
    "spin_states",
    "brute_min",
    "gibbs_correlations",
    "two_chain_gibbs_correlations",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Tuple

import numpy as np
from astropy import log


# PROJECT-SPECIFIC

from .. import conf
from ..embedding import ChainPair
from ..instances import Instance
from ..utils import geometric_mean
from ..utils.exceptions import InputError, SizeCapError


##############################################################################
# PARAMETERS

CHUNK = 2 ** 15

# largest system whose Gibbs state is enumerated
CORRELATION_CAP = 20


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True, eq=False)
class OracleResult:
    """Exact minimum of a logical instance.

    Parameters
    ----------
    energy : float
        the minimum, offset included
    states : (k, n) ndarray of int8
        every minimizing state, in enumeration order
    correlations : (n, n) ndarray, optional
        Gibbs correlations ``<x_a x_b>`` if requested

    """

    energy: float
    states: np.ndarray
    correlations: Optional[np.ndarray] = None

    @property
    def state(self) -> np.ndarray:
        """One minimizing state."""
        return self.states[0]

    # /def

    @property
    def num_minima(self) -> int:
        return len(self.states)

    # /def


# /class


# ------------------------------------------------------------------------


def spin_states(n: int, start: int, stop: int) -> np.ndarray:
    """Basis states ``start .. stop - 1`` as spins, bit ``i`` set meaning -1.

    Examples
    --------
    >>> spin_states(2, 0, 4)
    array([[ 1,  1],
           [-1,  1],
           [ 1, -1],
           [-1, -1]], dtype=int8)

    """
    idx = np.arange(start, stop, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int8)


# /def


def _chunk_minima(instance, start, stop, atol):
    x = spin_states(instance.n, start, stop)
    e = instance.energies(x)
    low = e.min()
    keep = e <= low + atol
    return low, x[keep], e[keep]


# /def


def brute_min(
    instance: Instance,
    *,
    beta: Optional[float] = None,
    atol: float = 1e-9,
) -> OracleResult:
    """Exhaustive minimum over all ``2**n`` states.

    With no fields the last variable is pinned to +1 and the minimizers'
    negations are added back.

    Parameters
    ----------
    instance : `~embedding_util.instances.Instance`
    beta : float, optional
        also return the Gibbs correlations at this inverse temperature
    atol : float, optional
        energies within `atol` of the minimum count as minimizers

    Raises
    ------
    SizeCapError
        ``n > conf.brute_force_cap``

    Examples
    --------
    >>> from embedding_util.instances import Instance
    >>> res = brute_min(Instance.from_couplings(2, {(0, 1): 1.0}))
    >>> res.energy, res.num_minima
    (-1.0, 2)

    """
    cap = int(conf.brute_force_cap)
    if instance.n > cap:
        raise SizeCapError(f"n={instance.n} exceeds the enumeration cap {cap}")

    half = not instance.has_fields
    total = 2 ** (instance.n - half)
    bounds = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    with ThreadPoolExecutor(max_workers=max(1, int(conf.max_workers))) as pool:
        parts = list(
            pool.map(lambda b: _chunk_minima(instance, *b, atol), bounds)
        )

    low = min(p[0] for p in parts)
    states = np.concatenate(
        [x[e <= low + atol] for m, x, e in parts if m <= low + atol]
    )
    if half:
        states = np.concatenate([states, -states])
    log.debug(
        f"enumerated {total} states of {instance.kind} n={instance.n}: "
        f"E_min={low:.10g}, {len(states)} minimizers"
    )

    correlations = None
    if beta is not None:
        correlations = gibbs_correlations(
            instance.n, instance.edges, instance.j, beta, h=instance.h
        )
    return OracleResult(energy=float(low), states=states, correlations=correlations)


# /def


# ------------------------------------------------------------------------


def gibbs_correlations(
    n: int,
    edges: Sequence[Tuple[int, int]],
    j: Sequence[float],
    beta: float,
    *,
    h: Optional[Sequence[float]] = None,
) -> np.ndarray:
    """Exact ``<z_i z_k>`` of ``E(z) = sum J z_i z_k + sum h z_i`` at `beta`.

    Returns
    -------
    correlations : (n, n) ndarray
        unit diagonal

    Raises
    ------
    SizeCapError
        more than `CORRELATION_CAP` spins

    """
    if n > CORRELATION_CAP:
        raise SizeCapError(
            f"{n} spins exceed the Gibbs enumeration cap {CORRELATION_CAP}"
        )
    if not beta >= 0:
        raise InputError(f"beta must be non-negative, not {beta}")
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    j = np.asarray(j, dtype=float).reshape(-1)
    h = np.zeros(n) if h is None else np.asarray(h, dtype=float)

    def energies(z):
        out = z @ h
        if len(edges):
            out = out + (z[:, edges[:, 0]] * z[:, edges[:, 1]]) @ j
        return out

    total = 2 ** n
    # ground-energy shift keeps the weights in range
    shift = min(
        energies(spin_states(n, s, min(s + CHUNK, total)).astype(float)).min()
        for s in range(0, total, CHUNK)
    )
    moments = np.zeros((n, n))
    norm = 0.0
    for s in range(0, total, CHUNK):
        z = spin_states(n, s, min(s + CHUNK, total)).astype(float)
        w = np.exp(-beta * (energies(z) - shift))
        moments += (z * w[:, None]).T @ z
        norm += w.sum()
    return moments / norm


# /def


def two_chain_gibbs_correlations(
    pair: ChainPair,
    beta: float,
    lam: float,
    coupling: float,
) -> Tuple[float, np.ndarray]:
    """Inter-chain correlation of two classical chains joined by links.

    Chain bonds are ``-lam``; `coupling` is spread uniformly over the
    links. The aggregate is the geometric mean of ``|<z_i z_k>|`` over
    all ``i`` in chain a and ``k`` in chain b, carrying the sign of
    their mean.

    Returns
    -------
    c_ab : float
        0 for ``coupling == 0``
    block : (len_a, len_b) ndarray
        the individual correlations

    """
    off = pair.len_a
    edges = list(pair.bonds_a) + [(i + off, k + off) for i, k in pair.bonds_b]
    j = [-lam] * len(edges)
    edges += [(i, k + off) for i, k in pair.links]
    j += [coupling / len(pair.links)] * len(pair.links)

    corr = gibbs_correlations(pair.num_qubits, edges, j, beta)
    block = corr[:off, off:]
    if coupling == 0:
        return 0.0, np.zeros_like(block)
    sign = np.sign(block.mean())
    return float(sign * geometric_mean(np.abs(block).ravel())), block


# /def


##############################################################################
# END
