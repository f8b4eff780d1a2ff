# -*- coding: utf-8 -*-

"""Programmable Physical Problems.

Routine Listings
----------------
`PhysicalProblem`
`aligned_state`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "PhysicalProblem",
    "aligned_state",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import functools
from typing import Any, Dict, List

import numpy as np
from scipy import sparse


# PROJECT-SPECIFIC

from ..topology import PhysicalGraph
from ..utils import as_spin_array, spin_energies
from ..utils.exceptions import InputError
from ..utils.io import content_id


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True, eq=False)
class PhysicalProblem:
    """Programmed fields and couplers on a Chimera graph.

    All stored values are the programmed ones, i.e. already multiplied
    by the rescale factor `scale`. Chain couplers carry ``-scale * lam``.

    Parameters
    ----------
    graph : `~embedding_util.topology.PhysicalGraph`
    qubits : (Q,) ndarray of int
        the programmed (chain) qubits, sorted; samples are over these
    h : (Q,) ndarray
        per-qubit fields, aligned with `qubits`
    couplers : (K, 2) ndarray of int
        programmed couplers ``(i, j)``, ``i < j``, sorted
    j : (K,) ndarray
        coupler values, aligned with `couplers`
    chain : (K,) ndarray of bool
        which couplers bind a chain
    lam : float
        chain strength before rescaling
    scale : float, optional
        rescale factor R (default 1)
    provenance : dict, optional
        ids of the instance and embedding and the compensation settings

    """

    graph: PhysicalGraph
    qubits: np.ndarray
    h: np.ndarray
    couplers: np.ndarray
    j: np.ndarray
    chain: np.ndarray
    lam: float
    scale: float = 1.0
    provenance: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        qubits = np.array(self.qubits, dtype=np.int64).reshape(-1)
        h = np.array(self.h, dtype=float).reshape(-1)
        couplers = np.array(self.couplers, dtype=np.int64).reshape(-1, 2)
        j = np.array(self.j, dtype=float).reshape(-1)
        chain = np.array(self.chain, dtype=bool).reshape(-1)

        if qubits.size == 0:
            raise InputError("a physical problem needs at least one qubit")
        if h.shape != qubits.shape:
            raise InputError("h and qubits differ in length")
        if not (len(couplers) == len(j) == len(chain)):
            raise InputError("couplers, j and chain flags differ in length")
        if np.any(np.diff(qubits) <= 0):
            raise InputError("qubits must be sorted and unique")
        dead = set(qubits.tolist()) - self.graph.qubits
        if dead:
            raise InputError(f"problem uses dead qubits {sorted(dead)}")
        for i, k in couplers.tolist():
            if not (i < k and self.graph.has_coupler(i, k)):
                raise InputError(f"({i}, {k}) is not a live coupler")
        if not self.scale > 0:
            raise InputError(f"rescale factor must be positive, not {self.scale}")

        order = np.lexsort((couplers[:, 1], couplers[:, 0]))
        couplers, j, chain = couplers[order], j[order], chain[order]

        for arr in (qubits, h, couplers, j, chain):
            arr.setflags(write=False)
        object.__setattr__(self, "qubits", qubits)
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "couplers", couplers)
        object.__setattr__(self, "j", j)
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "scale", float(self.scale))

    # /def

    # --------------------------------------------------------------
    # views

    @property
    def num_qubits(self) -> int:
        return len(self.qubits)

    @property
    def num_chain_couplers(self) -> int:
        return int(self.chain.sum())

    @functools.cached_property
    def index(self) -> Dict[int, int]:
        """Qubit id -> column in sample arrays."""
        return {int(q): k for k, q in enumerate(self.qubits)}

    # /def

    @functools.cached_property
    def columns(self) -> np.ndarray:
        """(K, 2) coupler endpoints as sample-array columns."""
        cols = np.searchsorted(self.qubits, self.couplers)
        cols.setflags(write=False)
        return cols

    # /def

    @functools.cached_property
    def adjacency(self) -> sparse.csr_matrix:
        """Symmetric (Q, Q) sparse matrix of programmed coupler values."""
        q = self.num_qubits
        if not len(self.j):
            return sparse.csr_matrix((q, q))
        a, b = self.columns.T
        mat = sparse.coo_matrix(
            (np.concatenate((self.j, self.j)), (np.r_[a, b], np.r_[b, a])),
            shape=(q, q),
        )
        return mat.tocsr()

    # /def

    @functools.cached_property
    def id(self) -> str:
        return content_id(self.to_dict(with_id=False))

    # /def

    # --------------------------------------------------------------
    # energies

    def energies(self, z: np.ndarray) -> np.ndarray:
        """Programmed energies of a batch of physical states.

        Parameters
        ----------
        z : (S, Q) array of +-1
            columns aligned with `qubits`

        """
        z = as_spin_array(z, self.num_qubits, ndim=2)
        return spin_energies(z, self.h, self.columns, self.j)

    # /def

    def energy(self, z) -> float:
        z = as_spin_array(z, self.num_qubits, ndim=1)
        return float(self.energies(z[None, :])[0])

    # /def

    # --------------------------------------------------------------
    # ranges

    def check_ranges(
        self,
        chain_range: float = 2.0,
        coupler_range: float = 1.0,
        field_range: float = 2.0,
        atol: float = 1e-9,
    ) -> List[str]:
        """List programmed values outside the hardware ranges.

        Returns
        -------
        violations : list of str
            empty if every value is in range

        """
        out = []
        chain_j = np.abs(self.j[self.chain])
        other_j = np.abs(self.j[~self.chain])
        if chain_j.size and chain_j.max() > chain_range + atol:
            out.append(f"chain coupler {chain_j.max():.6g} > {chain_range}")
        if other_j.size and other_j.max() > coupler_range + atol:
            out.append(f"coupler {other_j.max():.6g} > {coupler_range}")
        if np.abs(self.h).max() > field_range + atol:
            out.append(f"field {np.abs(self.h).max():.6g} > {field_range}")
        if np.any(self.j[self.chain] > 0):
            out.append("chain couplers must be ferromagnetic")
        return out

    # /def

    def scaled(self, factor: float) -> "PhysicalProblem":
        """Copy with every programmed value multiplied by `factor`."""
        return dataclasses.replace(
            self,
            h=self.h * factor,
            j=self.j * factor,
            scale=self.scale * factor,
        )

    # /def

    # --------------------------------------------------------------
    # serialization

    def to_dict(self, with_id: bool = True) -> Dict[str, Any]:
        doc = dict(
            graph=self.graph.to_dict(),
            h=[[int(q), float(v)] for q, v in zip(self.qubits, self.h)],
            j=[
                [int(a), int(b), float(v)]
                for (a, b), v in zip(self.couplers, self.j)
            ],
            chain_couplers=[
                [int(a), int(b)] for a, b in self.couplers[self.chain]
            ],
            **{"lambda": self.lam, "R": self.scale},
            provenance=self.provenance,
        )
        if with_id:
            doc["id"] = self.id
        return doc

    # /def

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "PhysicalProblem":
        try:
            graph = PhysicalGraph.from_dict(doc["graph"])
            fields = doc["h"]
            entries = doc["j"]
            lam = doc["lambda"]
        except KeyError as e:
            raise InputError(f"problem document missing key {e}")
        chained = {tuple(c) for c in doc.get("chain_couplers", ())}
        return cls(
            graph=graph,
            qubits=[q for q, _ in fields],
            h=[v for _, v in fields],
            couplers=np.asarray(
                [(a, b) for a, b, _ in entries], dtype=np.int64
            ).reshape(-1, 2),
            j=[v for _, _, v in entries],
            chain=[(a, b) in chained for a, b, _ in entries],
            lam=lam,
            scale=doc.get("R", 1.0),
            provenance=doc.get("provenance", {}),
        )

    # /def


# /class


# ------------------------------------------------------------------------


def aligned_state(problem: PhysicalProblem, embedding, x) -> np.ndarray:
    """Chain-aligned physical state z(x): each chain copies its variable.

    Parameters
    ----------
    problem : `PhysicalProblem`
    embedding : `~embedding_util.embedding.Embedding`
    x : (n,) or (S, n) array of +-1

    Returns
    -------
    z : ndarray of int8
        (Q,) or (S, Q), columns aligned with ``problem.qubits``

    """
    single = np.ndim(x) == 1
    x = as_spin_array(x, len(embedding), ndim=2)
    owner = embedding.owner
    try:
        var = np.array([owner[int(q)] for q in problem.qubits])
    except KeyError as e:
        raise InputError(f"qubit {e} is in no chain of the embedding")
    z = x[:, var]
    return z[0] if single else z


# /def


##############################################################################
# END
