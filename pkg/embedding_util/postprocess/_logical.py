# -*- coding: utf-8 -*-

"""Logical Sample Sets.

Routine Listings
----------------
`LogicalSampleSet`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["LogicalSampleSet"]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import os
from typing import Any, Dict, Union

import numpy as np
from astropy.table import Table


# PROJECT-SPECIFIC

from ..instances import Instance
from ..utils import as_spin_array
from ..utils.exceptions import InputError
from ..utils.io import read_table, write_table


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True, eq=False)
class LogicalSampleSet:
    """Samples mapped to the logical space.

    Parameters
    ----------
    states : (S, n) ndarray of int8
    energies : (S,) ndarray
        logical energies, offset included
    method : str
        mapping tag, e.g. "MV" or "MV+GD"
    aligned : (S,) ndarray of bool, optional
        whether every chain of the physical read was unanimous
    gd_updates : (S,) ndarray of int, optional
        spin updates greedy descent applied to each sample
    provenance : dict, optional

    """

    states: np.ndarray
    energies: np.ndarray
    method: str
    aligned: Union[np.ndarray, None] = None
    gd_updates: Union[np.ndarray, None] = None
    provenance: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        states = np.array(self.states, dtype=np.int8)
        if states.ndim != 2:
            raise InputError(f"states must be 2-d, not shape {states.shape}")
        if states.size and not np.all((states == 1) | (states == -1)):
            raise InputError("spins must be -1 or +1")
        num = len(states)
        energies = np.array(self.energies, dtype=float).reshape(-1)
        aligned = (
            np.zeros(num, dtype=bool)
            if self.aligned is None
            else np.array(self.aligned, dtype=bool).reshape(-1)
        )
        updates = (
            np.zeros(num, dtype=np.int64)
            if self.gd_updates is None
            else np.array(self.gd_updates, dtype=np.int64).reshape(-1)
        )
        if not (len(energies) == len(aligned) == len(updates) == num):
            raise InputError("per-sample arrays differ in length")

        for arr in (states, energies, aligned, updates):
            arr.setflags(write=False)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "aligned", aligned)
        object.__setattr__(self, "gd_updates", updates)

    # /def

    def __len__(self) -> int:
        return len(self.states)

    # /def

    @property
    def n(self) -> int:
        return self.states.shape[1]

    # /def

    @property
    def num_reads(self) -> int:
        """Physical reads the samples were mapped from.

        Larger than ``len(self)`` when a mapping discarded reads.

        """
        return int(self.provenance.get("num_reads", len(self)))

    # /def

    def verify(self, instance: Instance, atol: float = 1e-9) -> None:
        """Check the energies against `instance`.

        Raises
        ------
        InputError
            wrong width or energies off by more than `atol`

        """
        if len(self) == 0:
            return
        states = as_spin_array(self.states, instance.n, ndim=2)
        diff = np.abs(instance.energies(states) - self.energies).max()
        if diff > atol:
            raise InputError(f"logical energies off by {diff:.3g}")

    # /def

    # --------------------------------------------------------------
    # tables

    def to_table(self) -> Table:
        """One row per sample: spins ``x0..``, energy, aligned, gd_updates."""
        cols = {f"x{a}": self.states[:, a] for a in range(self.n)}
        table = Table(cols)
        table["energy"] = self.energies
        table["aligned"] = self.aligned.astype(np.int8)
        table["gd_updates"] = self.gd_updates
        table.meta.update(method=self.method, n=self.n, provenance=self.provenance)
        return table

    # /def

    @classmethod
    def from_table(cls, table: Table) -> "LogicalSampleSet":
        try:
            n = int(table.meta["n"])
            method = table.meta["method"]
        except KeyError as e:
            raise InputError(f"table metadata missing {e}")
        states = np.column_stack(
            [np.asarray(table[f"x{a}"]) for a in range(n)]
        ).reshape(len(table), n)
        return cls(
            states=states,
            energies=np.asarray(table["energy"], dtype=float),
            method=method,
            aligned=np.asarray(table["aligned"]).astype(bool),
            gd_updates=np.asarray(table["gd_updates"]),
            provenance=table.meta.get("provenance", {}),
        )

    # /def

    def write(self, path: Union[str, os.PathLike]):
        """CSV with a ``.json`` metadata sidecar."""
        return write_table(path, self.to_table())

    # /def

    @classmethod
    def read(cls, path: Union[str, os.PathLike]) -> "LogicalSampleSet":
        return cls.from_table(read_table(path))

    # /def


# /class


##############################################################################
# END
