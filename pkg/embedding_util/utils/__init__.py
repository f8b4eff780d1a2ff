# -*- coding: utf-8 -*-

"""Common non-package specific utility functions.

Licensed under a 3-clause BSD style license - see LICENSE.rst

Routine Listings
----------------
`make_rng`
`geometric_mean`
`as_spin_array`
`spin_energies`

exceptions, decorators, io : modules

"""

__author__ = "Nathaniel Starkman"


__all__ = [
    "make_rng",
    "geometric_mean",
    "as_spin_array",
    "spin_energies",
    "STREAMS",
]


##############################################################################
# IMPORTS

# GENERAL

from typing import Sequence, Union

import numpy as np


# PROJECT-SPECIFIC

from .exceptions import InputError

# import top-level
from . import exceptions, decorators, io  # noqa


##############################################################################
# PARAMETERS

# named stream prefixes; a full stream id is (prefix, *extra)
STREAMS = dict(
    instance=0,
    noise=1,
    sampler=2,
    mapping=3,
    descent=4,
    random_logical=5,
    bootstrap=6,
    cell=7,
    spectral=8,
)


##############################################################################
# CODE
##############################################################################


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Counter-based random generator for a named stream.

    Parameters
    ----------
    seed : int
        the 64-bit base seed
    *stream : int
        the stream id, e.g. ``(STREAMS["noise"],)`` or
        ``(STREAMS["sampler"], block)``.
        Different stream ids give statistically independent draws.

    Returns
    -------
    rng : `~numpy.random.Generator`
        backed by the Philox 4x64 counter-based bit generator.

    Examples
    --------
    >>> a = make_rng(7, 0).integers(0, 2**32, 3)
    >>> b = make_rng(7, 0).integers(0, 2**32, 3)
    >>> bool((a == b).all())
    True

    """
    if int(seed) < 0:
        raise InputError(f"seed must be non-negative, not {seed}")
    if any(int(s) < 0 for s in stream):
        raise InputError(f"stream ids must be non-negative, not {stream}")

    seq = np.random.SeedSequence(
        int(seed), spawn_key=tuple(int(s) for s in stream)
    )
    return np.random.Generator(np.random.Philox(seq))


# /def


# ------------------------------------------------------------------------


def geometric_mean(values: Sequence[float]) -> float:
    """Geometric mean of strictly positive values.

    Examples
    --------
    >>> geometric_mean([1.0, 4.0])
    2.0

    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise InputError("geometric mean of an empty sequence")
    if np.any(values <= 0):
        raise InputError("geometric mean requires positive values")

    return float(np.exp(np.mean(np.log(values))))


# /def


# ------------------------------------------------------------------------


def as_spin_array(
    x: Union[Sequence[int], np.ndarray], n: int, *, ndim: int = 1
) -> np.ndarray:
    """Validate spins in {-1, +1} of trailing length `n`.

    Parameters
    ----------
    x : array-like
    n : int
        required trailing dimension
    ndim : int, optional
        1 for a single state, 2 for a batch of states

    Returns
    -------
    spins : ndarray of int8

    Raises
    ------
    InputError
        wrong shape or values outside {-1, +1}

    """
    arr = np.asarray(x)
    if ndim == 2 and arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != ndim or arr.shape[-1] != n:
        raise InputError(
            f"expected spin array with {ndim} dims and length {n}, "
            f"got shape {arr.shape}"
        )
    if not np.all((arr == 1) | (arr == -1)):
        raise InputError("spins must be -1 or +1")

    return arr.astype(np.int8)


# /def


def spin_energies(
    z: np.ndarray, h: np.ndarray, pairs: np.ndarray, j: np.ndarray
) -> np.ndarray:
    """Ising energies ``sum h_i z_i + sum J_ik z_i z_k`` of a batch.

    Every row is summed term by term in the same fixed order, so a
    state's energy does not depend on the rest of the batch.

    Parameters
    ----------
    z : (S, n) ndarray of +-1
    h : (n,) ndarray
    pairs : (E, 2) ndarray of int
        column pairs of the couplers
    j : (E,) ndarray

    Returns
    -------
    energies : (S,) ndarray

    Examples
    --------
    >>> spin_energies(np.array([[1, -1]]), np.array([0.5, 0.0]),
    ...               np.array([[0, 1]]), np.array([1.0]))
    array([-0.5])

    """
    z = np.asarray(z, dtype=float)
    out = np.zeros(len(z))
    for col, hk in enumerate(np.asarray(h, dtype=float)):
        if hk:
            out += hk * z[:, col]
    for (a, b), jk in zip(np.asarray(pairs).reshape(-1, 2), j):
        out += jk * (z[:, a] * z[:, b])
    return out


# /def


##############################################################################
# END
