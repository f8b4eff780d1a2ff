# -*- coding: utf-8 -*-

"""Transfer-Matrix Correlations of Ferromagnetic Chains."""

__author__ = "Nathaniel Starkman"

__all__ = [
    "chain_gibbs_correlations",
    "chain_xi",
]


##############################################################################
# IMPORTS

# GENERAL

import numpy as np


# PROJECT-SPECIFIC

from ..utils.exceptions import InputError


##############################################################################
# CODE
##############################################################################


def chain_gibbs_correlations(length: int, beta: float, lam: float) -> np.ndarray:
    """Exact ``<z_i z_k>`` of an open path chain with bonds ``-lam``.

    Parameters
    ----------
    length : int
        chain length L
    beta : float
        inverse temperature
    lam : float
        chain strength, positive

    Returns
    -------
    correlations : (L, L) ndarray
        ``tanh(beta lam) ** |i - k|`` up to rounding

    Examples
    --------
    >>> c = chain_gibbs_correlations(8, 0.5, 1.0)
    >>> round(float(c[0, 3]), 5)
    0.09869

    """
    length = int(length)
    if length < 1:
        raise InputError(f"chain length must be positive, not {length}")
    if not lam > 0:
        raise InputError(f"chain strength must be positive, not {lam}")
    if not beta >= 0:
        raise InputError(f"beta must be non-negative, not {beta}")

    # normalized transfer matrix, eigenvalues 1 and tanh(beta lam)
    k = beta * lam
    transfer = np.array([[1.0, np.exp(-2 * k)], [np.exp(-2 * k), 1.0]])
    transfer /= 1.0 + np.exp(-2 * k)
    spin = np.diag([1.0, -1.0])
    ones = np.ones(2)

    powers = [np.eye(2)]
    for _ in range(length - 1):
        powers.append(powers[-1] @ transfer)

    norm = ones @ powers[length - 1] @ ones
    out = np.eye(length)
    for i in range(length):
        for j in range(i + 1, length):
            val = (
                ones
                @ powers[i]
                @ spin
                @ powers[j - i]
                @ spin
                @ powers[length - 1 - j]
                @ ones
            )
            out[i, j] = out[j, i] = val / norm
    return out


# /def


def chain_xi(beta: float, lam: float) -> float:
    """Correlation length ``-1 / log tanh(beta lam)`` of a classical chain.

    Examples
    --------
    >>> round(chain_xi(0.5, 1.0), 4)
    1.2954

    """
    t = np.tanh(beta * lam)
    if not 0 < t < 1:
        raise InputError("beta * lam must be positive and finite")
    return float(-1.0 / np.log(t))


# /def


##############################################################################
# END
