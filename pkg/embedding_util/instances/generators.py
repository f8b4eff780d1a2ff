# -*- coding: utf-8 -*-

"""Problem Ensembles.

Spin glasses with +-1 couplings on a clique (CSG), a complete bipartite
graph (BSG) and an open-boundary cubic lattice (3DSG), and maximum
likelihood CDMA decoding problems.

All generators are pure functions of their parameters and seed. Draws
come from :func:`~embedding_util.utils.make_rng` with the ``instance``
stream for couplings, code matrix and bits, and the ``noise`` stream for
channel noise.

Routine Listings
----------------
`gen_csg`
`gen_bsg`
`gen_3dsg`
`gen_cdma`
`cubic_site`
`cubic_edges`
`cdma_noise_variance`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "gen_csg",
    "gen_bsg",
    "gen_3dsg",
    "gen_cdma",
    "cubic_site",
    "cubic_edges",
    "cdma_noise_variance",
]


##############################################################################
# IMPORTS

# GENERAL

from typing import Iterable, Optional, Tuple

import numpy as np
from astropy import log


# PROJECT-SPECIFIC

from ._instance import CDMAPayload, Instance, with_target_energy
from ..utils import STREAMS, make_rng
from ..utils.exceptions import InputError


##############################################################################
# CODE
##############################################################################


def _check_n(n: int) -> int:
    if int(n) != n or n < 2:
        raise InputError(f"n must be an integer >= 2, not {n}")
    return int(n)


# /def


def _pm1(rng: np.random.Generator, size: int) -> np.ndarray:
    """Uniform +-1 draws."""
    return 2.0 * rng.integers(0, 2, size=size) - 1.0


# /def


# ------------------------------------------------------------------------


def gen_csg(n: int, seed: int) -> Instance:
    """Clique spin glass, J_ab = +-1 on all pairs.

    Examples
    --------
    >>> gen_csg(4, 1).num_edges
    6

    """
    n = _check_n(n)
    a, b = np.triu_indices(n, k=1)
    rng = make_rng(seed, STREAMS["instance"])
    return Instance(
        n=n,
        h=np.zeros(n),
        edges=np.column_stack((a, b)),
        j=_pm1(rng, len(a)),
        kind="CSG",
        seed=int(seed),
    )


# /def


def gen_bsg(n: int, seed: int) -> Instance:
    """Biclique spin glass, J = +-1 between variables ``< n/2`` and ``>= n/2``.

    Raises
    ------
    InputError
        odd `n`

    """
    n = _check_n(n)
    if n % 2:
        raise InputError(f"biclique spin glass needs even n, not {n}")
    half = n // 2
    a, b = np.meshgrid(np.arange(half), np.arange(half, n), indexing="ij")
    rng = make_rng(seed, STREAMS["instance"])
    return Instance(
        n=n,
        h=np.zeros(n),
        edges=np.column_stack((a.ravel(), b.ravel())),
        j=_pm1(rng, half * half),
        kind="BSG",
        seed=int(seed),
    )


# /def


# ------------------------------------------------------------------------


def cubic_site(dims: Tuple[int, int, int], x: int, y: int, z: int) -> int:
    """Variable index of lattice site (x, y, z), z running fastest."""
    _, ly, lz = dims
    return (x * ly + y) * lz + z


# /def


def cubic_edges(dims: Tuple[int, int, int]) -> np.ndarray:
    """Open-boundary nearest-neighbour pairs of an Lx x Ly x Lz lattice.

    Examples
    --------
    >>> len(cubic_edges((4, 4, 4)))
    144

    """
    lx, ly, lz = dims
    idx = np.arange(lx * ly * lz).reshape(lx, ly, lz)
    pairs = [
        np.column_stack((idx[:-1].ravel(), idx[1:].ravel())),
        np.column_stack((idx[:, :-1].ravel(), idx[:, 1:].ravel())),
        np.column_stack((idx[:, :, :-1].ravel(), idx[:, :, 1:].ravel())),
    ]
    edges = np.concatenate(pairs).reshape(-1, 2)
    return edges[np.lexsort((edges[:, 1], edges[:, 0]))]


# /def


def gen_3dsg(
    dims: Tuple[int, int, int],
    seed: int,
    vacant_sites: Optional[Iterable[int]] = None,
    vacant_edges: Optional[Iterable[Tuple[int, int]]] = None,
) -> Instance:
    """Cubic-lattice spin glass with open boundaries.

    Parameters
    ----------
    dims : (Lx, Ly, Lz)
        each at least 1
    seed : int
    vacant_sites : iterable of int, optional
        variables whose couplings are all removed; the variables stay
        in the problem so embeddings and indices are unchanged
    vacant_edges : iterable of (int, int), optional
        lattice edges to remove

    Notes
    -----
    Couplings are drawn for the full lattice before vacancies are
    applied, so a vacancy never changes the surviving couplings.

    """
    dims = tuple(int(d) for d in dims)
    if len(dims) != 3 or min(dims) < 1:
        raise InputError(f"dims must be three positive integers, not {dims}")
    n = int(np.prod(dims))

    edges = cubic_edges(dims)
    rng = make_rng(seed, STREAMS["instance"])
    j = _pm1(rng, len(edges))

    sites = set() if vacant_sites is None else {int(s) for s in vacant_sites}
    holes = (
        set()
        if vacant_edges is None
        else {(min(a, b), max(a, b)) for a, b in vacant_edges}
    )
    if any(s < 0 or s >= n for s in sites):
        raise InputError("vacant site out of range")
    lattice = set(map(tuple, edges.tolist()))
    if not holes <= lattice:
        raise InputError(f"vacant edges not in lattice: {sorted(holes - lattice)}")

    keep = np.array(
        [
            a not in sites and b not in sites and (a, b) not in holes
            for a, b in edges.tolist()
        ],
        dtype=bool,
    )
    if len(edges) and not keep.all():
        log.debug(f"3DSG vacancies removed {int((~keep).sum())} couplings")

    return Instance(
        n=n,
        h=np.zeros(n),
        edges=edges[keep] if len(edges) else edges,
        j=j[keep] if len(edges) else j,
        kind="3DSG",
        seed=int(seed),
        params=dict(
            dims=list(dims),
            vacant_sites=sorted(sites),
            vacant_edges=[list(e) for e in sorted(holes)],
        ),
    )


# /def


# ------------------------------------------------------------------------


def cdma_noise_variance(snr_db: float) -> float:
    """sigma0**2 = 10**(-snr_db / 10) / 2.

    Examples
    --------
    >>> round(cdma_noise_variance(7), 5)
    0.09976

    """
    return 10.0 ** (-snr_db / 10.0) / 2.0


# /def


def gen_cdma(
    n: int, load: float = 1.4, snr_db: float = 7.0, *, seed: int
) -> Instance:
    """Maximum-likelihood CDMA decoding as an Ising problem.

    The negative log-likelihood
    ``|y - W x|**2 / (2 sigma0**2)`` expands to
    ``h = -W^T y / sigma0**2``, ``J_ab = (W^T W)_ab / sigma0**2`` (a < b)
    plus a constant, which is stored as the instance `offset`.

    Parameters
    ----------
    n : int
        number of users (variables)
    load : float, optional
        M / n, the number of chips per user (default 1.4)
    snr_db : float, optional
        signal to noise ratio in dB (default 7)
    seed : int

    Returns
    -------
    instance : `Instance`
        with ``target_energy = energy(b) = |noise|**2 / 2``

    """
    n = _check_n(n)
    if not load > 0:
        raise InputError(f"load must be positive, not {load}")
    m_rows = int(round(load * n))
    if m_rows < 1:
        raise InputError("load too small, no rows in the code matrix")

    sigma2 = cdma_noise_variance(snr_db)
    sigma0 = np.sqrt(sigma2)

    rng = make_rng(seed, STREAMS["instance"])
    code = _pm1(rng, m_rows * n).reshape(m_rows, n) / np.sqrt(n)
    bits = _pm1(rng, n)
    noise = make_rng(seed, STREAMS["noise"]).standard_normal(m_rows)
    signal = code @ bits + sigma0 * noise

    gram = code.T @ code
    a, b = np.triu_indices(n, k=1)
    h = -(code.T @ signal) / sigma2
    j = gram[a, b] / sigma2
    offset = (signal @ signal + np.trace(gram)) / (2.0 * sigma2)

    nonzero = j != 0
    inst = Instance(
        n=n,
        h=h,
        edges=np.column_stack((a, b))[nonzero],
        j=j[nonzero],
        kind="CDMA",
        seed=int(seed),
        offset=offset,
        cdma=CDMAPayload(
            bits=bits.astype(np.int8),
            code=code,
            signal=signal,
            noise=noise,
            sigma0=float(sigma0),
        ),
        params=dict(load=float(load), snr_db=float(snr_db), rows=m_rows),
    )

    return with_target_energy(inst, inst.energy(bits.astype(np.int8)))


# /def


##############################################################################
# END
