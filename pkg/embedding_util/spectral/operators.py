# -*- coding: utf-8 -*-

"""Transverse-Field Ising Systems on a Few Qubits.

``H = -sum_i A_i sigma^x_i + B (sum_i h_i sigma^z_i
+ sum_(i,j) J_ij sigma^z_i sigma^z_j)``
in the computational basis, bit ``i`` of a basis index set meaning
``sigma^z_i = -1``.

Routine Listings
----------------
`IsingSystem`
`diagonal`
`hamiltonian`
`lowest_eigenvalues`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "IsingSystem",
    "diagonal",
    "hamiltonian",
    "lowest_eigenvalues",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
from typing import Optional, Tuple, Union

import numpy as np
from scipy import linalg, sparse
from scipy.sparse import linalg as splinalg


# PROJECT-SPECIFIC

from .. import conf
from ..utils import STREAMS, make_rng
from ..utils.exceptions import InputError, SizeCapError


##############################################################################
# PARAMETERS

# below this dimension the sparse path diagonalizes densely anyway
_SMALL_DIM = 64


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True, eq=False)
class IsingSystem:
    """A transverse-field Ising system.

    Parameters
    ----------
    n : int
        number of qubits
    edges : (K, 2) array-like of int
    j : (K,) array-like
        longitudinal couplings
    h : (n,) array-like, optional
        longitudinal fields, default zero
    transverse : float or (n,) array-like, optional
        transverse field A per qubit, default zero
    scale : float, optional
        the longitudinal energy scale B (default 1)

    """

    n: int
    edges: np.ndarray
    j: np.ndarray
    h: np.ndarray = None
    transverse: Union[float, np.ndarray] = 0.0
    scale: float = 1.0

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise InputError(f"a system needs at least one qubit, not {n}")
        edges = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        j = np.array(self.j, dtype=float).reshape(-1)
        h = np.zeros(n) if self.h is None else np.array(self.h, dtype=float)
        transverse = np.broadcast_to(
            np.asarray(self.transverse, dtype=float), (n,)
        ).copy()

        if len(edges) != len(j):
            raise InputError("edges and j differ in length")
        if h.shape != (n,):
            raise InputError(f"h must have length {n}")
        if edges.size and (
            edges.min() < 0
            or edges.max() >= n
            or np.any(edges[:, 0] == edges[:, 1])
        ):
            raise InputError("edge endpoints must be distinct qubits in range")
        if np.any(transverse < 0):
            raise InputError("transverse fields must be non-negative")
        if not self.scale > 0:
            raise InputError(f"B must be positive, not {self.scale}")

        for arr in (edges, j, h, transverse):
            arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "transverse", transverse)
        object.__setattr__(self, "scale", float(self.scale))

    # /def

    @property
    def has_fields(self) -> bool:
        """Whether any longitudinal field breaks spin-flip symmetry."""
        return bool(np.any(self.h != 0))

    # /def


# /class


# ------------------------------------------------------------------------


def _sector_dim(system: IsingSystem, sector: Optional[int]) -> int:
    return 2 ** (system.n - (sector is not None))


def _flips(system: IsingSystem, sector: Optional[int], states: np.ndarray):
    """Yield ``(A_i * sign, target states)`` for every spin flip.

    In a spin-flip sector the basis is the states with the top bit clear;
    flipping the top bit lands on the partner of ``s ^ lower`` with the
    sector's sign.

    """
    n = system.n
    for i in range(n):
        a = system.transverse[i]
        if a == 0:
            continue
        if sector is None or i < n - 1:
            yield a, states ^ (1 << i)
        else:
            yield a * sector, states ^ ((1 << (n - 1)) - 1)


# /def


def diagonal(system: IsingSystem, sector: Optional[int] = None) -> np.ndarray:
    """Longitudinal energies of the basis states.

    Parameters
    ----------
    system : `IsingSystem`
    sector : {None, 1, -1}, optional
        restrict to the spin-flip symmetric (1) or antisymmetric (-1)
        sector; requires zero fields

    Examples
    --------
    >>> system = IsingSystem(2, [(0, 1)], [-1.0])
    >>> diagonal(system)
    array([-1.,  1.,  1., -1.])

    """
    _check_sector(system, sector)
    states = np.arange(_sector_dim(system, sector), dtype=np.int64)
    out = np.zeros(len(states))
    for i, hi in enumerate(system.h):
        if hi:
            out += hi * (1 - 2 * ((states >> i) & 1))
    for (a, b), jab in zip(system.edges, system.j):
        out += jab * (1 - 2 * (((states >> a) ^ (states >> b)) & 1))
    return system.scale * out


# /def


def hamiltonian(
    system: IsingSystem, sector: Optional[int] = None
) -> sparse.csr_matrix:
    """Sparse Hamiltonian, in full or restricted to a spin-flip sector."""
    _check_sector(system, sector)
    dim = _sector_dim(system, sector)
    states = np.arange(dim, dtype=np.int64)
    rows, cols, vals = [states], [states], [diagonal(system, sector)]
    for a, target in _flips(system, sector, states):
        rows.append(states)
        cols.append(target)
        vals.append(np.full(dim, -a))
    mat = sparse.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
    )
    return mat.tocsr()  # duplicates sum


# /def


def _linear_operator(
    system: IsingSystem, sector: Optional[int]
) -> splinalg.LinearOperator:
    dim = _sector_dim(system, sector)
    diag = diagonal(system, sector)
    states = np.arange(dim, dtype=np.int64)

    def matvec(v):
        v = np.ravel(v)
        out = diag * v
        for a, target in _flips(system, sector, states):
            out -= a * v[target]
        return out

    return splinalg.LinearOperator((dim, dim), matvec=matvec, dtype=float)


# /def


def _check_sector(system: IsingSystem, sector: Optional[int]):
    if sector not in (None, 1, -1):
        raise InputError(f"sector must be None, 1 or -1, not {sector}")
    if sector is not None and system.has_fields:
        raise InputError("spin-flip sectors need zero longitudinal fields")


# /def


# ------------------------------------------------------------------------


def _solve(system, sector, k, method) -> np.ndarray:
    dim = _sector_dim(system, sector)
    k = min(k, dim)
    if method == "dense" or dim <= _SMALL_DIM:
        mat = hamiltonian(system, sector).toarray()
        return linalg.eigh(
            mat, eigvals_only=True, subset_by_index=[0, k - 1]
        )

    v0 = make_rng(0, STREAMS["spectral"]).uniform(-1.0, 1.0, dim)
    vals = splinalg.eigsh(
        _linear_operator(system, sector),
        k=k,
        which="SA",
        v0=v0,
        return_eigenvectors=False,
    )
    return np.sort(vals)


# /def


def lowest_eigenvalues(
    system: IsingSystem,
    k: int = 3,
    *,
    method: str = "auto",
    reduce: Optional[bool] = None,
) -> np.ndarray:
    """The `k` lowest eigenvalues, ascending.

    Parameters
    ----------
    system : `IsingSystem`
    k : int, optional
        how many; capped at the Hilbert-space dimension
    method : {"auto", "dense", "sparse"}, optional
        "auto" is dense up to ``conf.dense_qubit_cap`` qubits and Lanczos
        beyond; nothing is diagonalized above ``conf.sparse_qubit_cap``
    reduce : bool, optional
        solve the two spin-flip sectors separately and merge. Defaults to
        True whenever the system has no longitudinal fields.

    Returns
    -------
    eigenvalues : (k,) ndarray

    Raises
    ------
    SizeCapError
        too many qubits for the chosen method

    Examples
    --------
    >>> system = IsingSystem(1, [], [], transverse=0.5)
    >>> lowest_eigenvalues(system, 2)
    array([-0.5,  0.5])

    """
    if method not in ("auto", "dense", "sparse"):
        raise InputError(f"unknown method {method!r}")
    if k < 1:
        raise InputError(f"k must be positive, not {k}")

    dense_cap, sparse_cap = int(conf.dense_qubit_cap), int(conf.sparse_qubit_cap)
    if system.n > sparse_cap or (method == "dense" and system.n > dense_cap):
        raise SizeCapError(
            f"{system.n} qubits exceed the {method} diagonalization cap "
            f"({dense_cap} dense, {sparse_cap} sparse)"
        )
    if method == "auto":
        method = "dense" if system.n <= dense_cap else "sparse"

    if reduce is None:
        reduce = not system.has_fields
    sectors: Tuple[Optional[int], ...] = (1, -1) if reduce else (None,)
    for sector in sectors:
        _check_sector(system, sector)

    vals = np.concatenate([_solve(system, s, k, method) for s in sectors])
    return np.sort(vals)[: min(k, 2 ** system.n)]


# /def


##############################################################################
# END
