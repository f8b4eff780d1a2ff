# -*- coding: utf-8 -*-

"""Ensemble-Average Edge Energy.

For an ensemble of instances on one embedding, the edge energy of
``(a, b)`` is ``J_ab <x_a x_b>`` averaged over the samples of an
instance, then over instances. For symmetric ensembles such as the
clique spin glass an unbiased sampler gives the same value on every
edge; spread across edges exposes a sampler that favours some edges.

Routine Listings
----------------
`EdgeEnergies`
`eaee`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["EdgeEnergies", "eaee"]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from astropy.table import Table


# PROJECT-SPECIFIC

from ..instances import Instance
from ..postprocess import LogicalSampleSet
from ..utils.exceptions import InputError
from .patterns import PatternClass
from .success import bootstrap_interval


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True, eq=False)
class EdgeEnergies:
    """Per-edge energies of an ensemble.

    Parameters
    ----------
    edges : (E, 2) ndarray of int
    per_instance : (I, E) ndarray
        ``J_ab <x_a x_b>`` of every instance
    classes : list of `PatternClass`, optional

    """

    edges: np.ndarray
    per_instance: np.ndarray
    classes: Optional[List[PatternClass]] = None

    @property
    def values(self) -> np.ndarray:
        """e_ab, the instance average."""
        return self.per_instance.mean(axis=0)

    @property
    def mean(self) -> float:
        return float(self.values.mean())

    @property
    def variance(self) -> float:
        """Variance of e_ab across edges."""
        return float(self.values.var())

    # /def

    def variance_interval(
        self,
        confidence: float = 0.95,
        num_resamples: int = 1000,
        seed: int = 0,
    ) -> Tuple[float, float]:
        """Bootstrap interval of `variance`, resampling instances."""
        return bootstrap_interval(
            self.per_instance,
            statistic=lambda sample: sample.mean(axis=0).var(),
            confidence=confidence,
            num_resamples=num_resamples,
            seed=seed,
        )

    # /def

    def class_means(self) -> Dict[str, float]:
        """Mean e_ab over the edges of each pattern class."""
        if self.classes is None:
            raise InputError("no pattern classes attached")
        column = {tuple(e): k for k, e in enumerate(self.edges.tolist())}
        out = {}
        for pattern in self.classes:
            cols = [column[e] for e in pattern.edges if e in column]
            if cols:
                out[pattern.label] = float(self.values[cols].mean())
        return out

    # /def

    def to_table(self) -> Table:
        """One row per edge; with classes, the class label and chi."""
        table = Table(
            dict(a=self.edges[:, 0], b=self.edges[:, 1], e_ab=self.values)
        )
        if self.classes is not None:
            lookup = {e: c for c in self.classes for e in c.edges}
            members = [lookup.get(tuple(e)) for e in self.edges.tolist()]
            table["pattern"] = [c.label if c else "" for c in members]
            table["chi"] = [c.chi if c else np.nan for c in members]
        table.meta.update(
            num_instances=len(self.per_instance),
            mean=self.mean,
            variance=self.variance,
        )
        return table

    # /def

    def to_dict(self) -> Dict[str, Any]:
        doc = dict(
            num_instances=len(self.per_instance),
            mean=self.mean,
            variance=self.variance,
        )
        if self.classes is not None:
            doc["classes"] = self.class_means()
        return doc

    # /def


# /class


# ------------------------------------------------------------------------


def eaee(
    ensemble: Sequence[Tuple[Instance, LogicalSampleSet]],
    classes: Optional[List[PatternClass]] = None,
) -> EdgeEnergies:
    """Edge energies of an ensemble sharing one edge set.

    Parameters
    ----------
    ensemble : sequence of (`Instance`, `LogicalSampleSet`)
    classes : list of `PatternClass`, optional
        attach for per-class means

    Raises
    ------
    InputError
        empty ensemble, an instance with no samples, or instances whose
        edge sets differ

    """
    if not ensemble:
        raise InputError("empty ensemble")
    edges = ensemble[0][0].edges
    rows = []
    for k, (instance, logical) in enumerate(ensemble):
        if not np.array_equal(instance.edges, edges):
            raise InputError(f"instance {k} has a different edge set")
        if len(logical) == 0:
            raise InputError(f"instance {k} has no samples")
        if logical.n != instance.n:
            raise InputError(f"instance {k}: samples have {logical.n} variables")
        x = logical.states.astype(float)
        corr = np.mean(x[:, edges[:, 0]] * x[:, edges[:, 1]], axis=0)
        rows.append(instance.j * corr)
    return EdgeEnergies(
        edges=np.array(edges), per_instance=np.array(rows), classes=classes
    )


# /def


##############################################################################
# END
