# -*- coding: utf-8 -*-

"""Logical Ising problems.

Routine Listings
----------------
`Instance`
`CDMAPayload`
`energy`
`with_target_energy`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "KINDS",
    "Instance",
    "CDMAPayload",
    "energy",
    "with_target_energy",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import functools
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np


# PROJECT-SPECIFIC

from ..utils import as_spin_array, spin_energies
from ..utils.exceptions import InputError
from ..utils.io import content_id


##############################################################################
# PARAMETERS

KINDS = ("CSG", "BSG", "3DSG", "CDMA", "custom")


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class CDMAPayload:
    """Channel data behind a CDMA decoding instance.

    Parameters
    ----------
    bits : (n,) ndarray
        transmitted bits b in {-1, +1}
    code : (M, n) ndarray
        spreading code W, entries +-1/sqrt(n)
    signal : (M,) ndarray
        received signal y = W b + sigma0 noise
    noise : (M,) ndarray
        the standard-normal noise draw
    sigma0 : float
        noise scale

    """

    bits: np.ndarray
    code: np.ndarray
    signal: np.ndarray
    noise: np.ndarray
    sigma0: float

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            b=self.bits.tolist(),
            W=self.code.tolist(),
            y=self.signal.tolist(),
            noise=self.noise.tolist(),
            sigma0=float(self.sigma0),
        )

    # /def

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "CDMAPayload":
        return cls(
            bits=np.asarray(doc["b"], dtype=np.int8),
            code=np.asarray(doc["W"], dtype=float),
            signal=np.asarray(doc["y"], dtype=float),
            noise=np.asarray(doc["noise"], dtype=float),
            sigma0=float(doc["sigma0"]),
        )

    # /def


# /class


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True, eq=False)
class Instance:
    """Logical Ising problem H(x) = sum_{a<b} J_ab x_a x_b + sum_a h_a x_a.

    Parameters
    ----------
    n : int
        number of variables
    h : (n,) ndarray
        external fields
    edges : (E, 2) ndarray of int
        coupled pairs (a, b) with a < b, sorted, unique
    j : (E,) ndarray
        couplings, aligned with `edges`
    kind : str
        one of `KINDS`
    seed : int, optional
    target_energy : float or None, optional
        E_T
    offset : float, optional
        constant added to every energy; CDMA keeps the dropped constant
        of the log-likelihood here. Never programmed on hardware.
    cdma : `CDMAPayload` or None, optional
    params : dict, optional
        generator parameters (dims, load, snr_db, vacancies...)

    """

    n: int
    h: np.ndarray
    edges: np.ndarray
    j: np.ndarray
    kind: str = "custom"
    seed: Optional[int] = None
    target_energy: Optional[float] = None
    offset: float = 0.0
    cdma: Optional[CDMAPayload] = None
    params: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        n = int(self.n)
        if n < 1:
            raise InputError(f"n must be positive, not {self.n}")

        h = np.array(self.h, dtype=float).reshape(-1)
        if h.size == 0:
            h = np.zeros(n)
        if h.shape != (n,):
            raise InputError(f"h has length {h.size}, expected {n}")

        edges = np.array(self.edges, dtype=np.int64).reshape(-1, 2)
        j = np.array(self.j, dtype=float).reshape(-1)
        if len(edges) != len(j):
            raise InputError("edges and j differ in length")
        if len(edges):
            if np.any(edges[:, 0] >= edges[:, 1]):
                raise InputError("coupling keys must satisfy a < b")
            if edges.min() < 0 or edges.max() >= n:
                raise InputError("coupling keys out of range")
            order = np.lexsort((edges[:, 1], edges[:, 0]))
            edges, j = edges[order], j[order]
            if np.any(np.all(np.diff(edges, axis=0) == 0, axis=1)):
                raise InputError("duplicate coupling keys")
        if self.kind not in KINDS:
            raise InputError(f"kind must be one of {KINDS}")

        h.setflags(write=False)
        edges.setflags(write=False)
        j.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "offset", float(self.offset))

    # /def

    # --------------------------------------------------------------
    # views

    @property
    def couplings(self) -> Dict[Tuple[int, int], float]:
        """Mapping (a, b) -> J_ab."""
        return {(int(a), int(b)): float(v) for (a, b), v in zip(self.edges, self.j)}

    # /def

    @functools.cached_property
    def coupling_matrix(self) -> np.ndarray:
        """Symmetric (n, n) matrix with J_ab in both triangles."""
        mat = np.zeros((self.n, self.n))
        if len(self.edges):
            a, b = self.edges.T
            mat[a, b] = self.j
            mat[b, a] = self.j
        mat.setflags(write=False)
        return mat

    # /def

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    # /def

    @property
    def has_fields(self) -> bool:
        return bool(np.any(self.h != 0))

    # /def

    @property
    def sigma2(self) -> float:
        """Coupling variance (2 / (N (N - 1))) sum_{a<b} J_ab**2."""
        if self.n < 2:
            return 0.0
        return float(2.0 * np.sum(self.j ** 2) / (self.n * (self.n - 1)))

    # /def

    @functools.cached_property
    def id(self) -> str:
        """Content id used as provenance."""
        return content_id(self.to_dict(with_id=False))

    # /def

    # --------------------------------------------------------------
    # energies

    def energies(
        self, x: np.ndarray, *, include_offset: bool = True
    ) -> np.ndarray:
        """Energies of a batch of states.

        Parameters
        ----------
        x : (S, n) array of +-1
        include_offset : bool, optional
            add `offset` (default True)

        Returns
        -------
        energies : (S,) ndarray

        """
        x = as_spin_array(x, self.n, ndim=2)
        out = spin_energies(x, self.h, self.edges, self.j)
        if include_offset:
            out = out + self.offset
        return out

    # /def

    def energy(self, x: Sequence[int], *, include_offset: bool = True) -> float:
        """Energy of one state, see :func:`energy`."""
        x = as_spin_array(x, self.n, ndim=1)
        return float(self.energies(x[None, :], include_offset=include_offset)[0])

    # /def

    # --------------------------------------------------------------
    # serialization

    def to_dict(self, with_id: bool = True) -> Dict[str, Any]:
        """JSON-able document."""
        doc = dict(
            kind=self.kind,
            n=self.n,
            seed=self.seed,
            h=self.h.tolist(),
            j=[[int(a), int(b), float(v)] for (a, b), v in zip(self.edges, self.j)],
            target_energy=self.target_energy,
            offset=self.offset,
            params=self.params,
        )
        if self.cdma is not None:
            doc["cdma"] = self.cdma.to_dict()
        if with_id:
            doc["id"] = self.id
        return doc

    # /def

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "Instance":
        """Rebuild from :meth:`to_dict` output."""
        try:
            entries = doc["j"]
            n = doc["n"]
        except KeyError as e:
            raise InputError(f"instance document missing key {e}")
        edges = [(int(a), int(b)) for a, b, _ in entries]
        j = [float(v) for _, _, v in entries]
        cdma = doc.get("cdma")
        return cls(
            n=n,
            h=doc.get("h") or np.zeros(n),
            edges=np.asarray(edges, dtype=np.int64).reshape(-1, 2),
            j=j,
            kind=doc.get("kind", "custom"),
            seed=doc.get("seed"),
            target_energy=doc.get("target_energy"),
            offset=doc.get("offset", 0.0),
            cdma=None if cdma is None else CDMAPayload.from_dict(cdma),
            params=doc.get("params", {}),
        )

    # /def

    @classmethod
    def from_couplings(
        cls,
        n: int,
        couplings: Dict[Tuple[int, int], float],
        h: Optional[Sequence[float]] = None,
        **kwargs: Any,
    ) -> "Instance":
        """Build from a ``{(a, b): J}`` mapping; keys are reordered to a < b.

        Zero-valued couplings are dropped.

        Examples
        --------
        >>> inst = Instance.from_couplings(2, {(0, 1): 1.0})
        >>> inst.energy([1, -1])
        -1.0

        """
        items = {}
        for (a, b), v in couplings.items():
            if a == b:
                raise InputError(f"self-coupling on variable {a}")
            key = (min(a, b), max(a, b))
            if v != 0:
                items[key] = items.get(key, 0.0) + float(v)
        edges = np.asarray(sorted(items), dtype=np.int64).reshape(-1, 2)
        j = [items[tuple(e)] for e in edges.tolist()]
        return cls(
            n=n,
            h=np.zeros(n) if h is None else h,
            edges=edges,
            j=j,
            **kwargs,
        )

    # /def


# /class


# ------------------------------------------------------------------------


def energy(instance: Instance, x: Sequence[int]) -> float:
    """Exact Hamiltonian value of state `x`, including any constant offset.

    Parameters
    ----------
    instance : `Instance`
    x : sequence of +-1
        length ``instance.n``

    Raises
    ------
    InputError
        wrong length or non-spin values

    Examples
    --------
    >>> inst = Instance.from_couplings(2, {(0, 1): 1.0})
    >>> energy(inst, [1, 1])
    1.0

    """
    return instance.energy(x)


# /def


def with_target_energy(instance: Instance, target_energy: float) -> Instance:
    """Copy of `instance` with E_T attached."""
    return dataclasses.replace(instance, target_energy=float(target_energy))


# /def


##############################################################################
# END
