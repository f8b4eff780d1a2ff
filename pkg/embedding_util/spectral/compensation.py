# -*- coding: utf-8 -*-

"""Spectral Compensation of Logical Couplings.

Isolated chains and chain pairs are diagonalized exactly in the
transverse-field Ising approximation. The first gap of a chain gives its
effective transverse field; the splitting of a chain pair's second and
third levels gives the effective logical coupling. Their ratio to the
programmed coupling is the spectral susceptibility, which compensates
logical couplings the same way the correlation-length model does.

Chain couplers are ferromagnetic, ``-B lam``, throughout.

Routine Listings
----------------
`SpectralResult`
`SpectralReport`
`freeze_out_field`
`chain_gap`
`pair_jeff`
`spectral_report`
`spectral_compensate`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "SpectralResult",
    "SpectralReport",
    "freeze_out_field",
    "chain_gap",
    "pair_jeff",
    "spectral_report",
    "spectral_compensate",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Optional, Tuple

import numpy as np
from astropy import log
from astropy.utils.exceptions import AstropyUserWarning


# PROJECT-SPECIFIC

from .operators import IsingSystem, lowest_eigenvalues
from .. import conf
from ..compiler import (
    CompensationConfig,
    PhysicalProblem,
    apply_susceptibilities,
)
from ..embedding import ChainPair, Embedding, chain_pair, validate
from ..instances import Instance
from ..topology import PhysicalGraph
from ..utils import geometric_mean
from ..utils.exceptions import InputError, SizeCapError, ValidationError


##############################################################################
# PARAMETERS

_Edge = Tuple[int, int]


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class SpectralResult:
    """Lowest levels of a chain or chain pair and what they imply.

    Parameters
    ----------
    eigenvalues : tuple of float
        lowest levels, ascending
    value : float
        the effective transverse field (single chain) or the effective
        logical coupling (chain pair)
    num_qubits : int
    transverse, scale : float
        A and B at the evaluation point
    chi : float, optional
        ``J_eff / J`` for a chain pair
    degenerate : bool, optional
        the levels defining `value` coincided
    detuning : float, optional
        difference of the two chains' effective transverse fields, in
        energy units; zero for identical chains

    """

    eigenvalues: Tuple[float, ...]
    value: float
    num_qubits: int
    transverse: float
    scale: float = 1.0
    chi: Optional[float] = None
    degenerate: bool = False
    detuning: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)

    # /def


# /class


def freeze_out_field(gamma: float, lam: float, scale: float = 1.0) -> float:
    """Transverse field ``A = gamma B lam`` at the evaluation point.

    Examples
    --------
    >>> freeze_out_field(1.0, 12.8)
    12.8

    """
    if not gamma >= 0:
        raise InputError(f"gamma must be non-negative, not {gamma}")
    return float(gamma * scale * lam)


# /def


def _check_energies(transverse, scale, lam):
    if not transverse >= 0:
        raise InputError(f"A must be non-negative, not {transverse}")
    if not scale > 0:
        raise InputError(f"B must be positive, not {scale}")
    if not lam > 0:
        raise InputError(f"chain strength must be positive, not {lam}")


# /def


# ------------------------------------------------------------------------


def chain_gap(
    length: int,
    transverse: float,
    scale: float = 1.0,
    lam: float = 1.0,
    *,
    method: str = "auto",
) -> SpectralResult:
    """Effective transverse field of an isolated path chain.

    Parameters
    ----------
    length : int
        chain length L
    transverse : float
        A
    scale : float, optional
        B
    lam : float, optional
        chain strength; chain couplers are ``-B lam``
    method : {"auto", "dense", "sparse"}, optional

    Returns
    -------
    result : `SpectralResult`
        ``value = (E_1 - E_0) / 2``

    Examples
    --------
    >>> chain_gap(1, 0.3).value
    0.3

    """
    _check_energies(transverse, scale, lam)
    length = int(length)
    if length < 1:
        raise InputError(f"chain length must be positive, not {length}")
    system = IsingSystem(
        length,
        [(k, k + 1) for k in range(length - 1)],
        [-lam] * (length - 1),
        transverse=transverse,
        scale=scale,
    )
    levels = lowest_eigenvalues(system, 2, method=method)
    return SpectralResult(
        eigenvalues=tuple(levels.tolist()),
        value=float((levels[1] - levels[0]) / 2),
        num_qubits=length,
        transverse=float(transverse),
        scale=float(scale),
    )


# /def


def _pair_system(pair, transverse, scale, lam, coupling) -> IsingSystem:
    """Chain pair with ``coupling`` spread uniformly over its links."""
    off = pair.len_a
    edges = list(pair.bonds_a) + [(i + off, k + off) for i, k in pair.bonds_b]
    j = [-lam] * len(edges)
    edges += [(i, k + off) for i, k in pair.links]
    j += [coupling / len(pair.links)] * len(pair.links)
    return IsingSystem(
        pair.num_qubits, edges, j, transverse=transverse, scale=scale
    )


# /def


def _chain_field(length, bonds, transverse, scale, lam, method) -> float:
    """Half the first gap of one chain of the pair, in energy units."""
    system = IsingSystem(
        length,
        list(bonds),
        [-lam] * len(bonds),
        transverse=transverse,
        scale=scale,
    )
    levels = lowest_eigenvalues(system, 2, method=method)
    return float(levels[1] - levels[0]) / 2


# /def


def pair_jeff(
    pair: ChainPair,
    transverse: float,
    scale: float = 1.0,
    lam: float = 1.0,
    coupling: float = 1.0,
    *,
    method: str = "auto",
    atol: float = 1e-9,
) -> SpectralResult:
    """Effective logical coupling of two connected chains.

    ``J_eff = sign(J) (E_2 - E_1) / (2 B)`` and ``chi = J_eff / J``.

    When the two chains differ in length or bond layout their effective
    transverse fields differ by ``d`` and the splitting mixes ``J_eff``
    with ``d``. Each chain is then diagonalized alone and ``d`` is removed
    in quadrature, ``J_eff = sign(J) sqrt(((E_2 - E_1) / 2)^2 - d^2) / B``.

    Parameters
    ----------
    pair : `~embedding_util.embedding.ChainPair`
    transverse : float
        A
    scale : float, optional
        B
    lam : float, optional
        chain strength
    coupling : float, optional
        logical coupling J, nonzero; spread over the links
    method : {"auto", "dense", "sparse"}, optional
    atol : float, optional
        levels closer than this count as degenerate, reported as
        ``chi = 0`` with ``degenerate=True``

    Returns
    -------
    result : `SpectralResult`

    Raises
    ------
    SizeCapError
        the pair has more qubits than can be diagonalized

    Examples
    --------
    >>> from embedding_util.embedding import ChainPair
    >>> res = pair_jeff(ChainPair(1, 1, ((0, 0),)), 1.0, coupling=0.5)
    >>> round(res.chi, 12)
    1.0

    """
    _check_energies(transverse, scale, lam)
    if coupling == 0:
        raise InputError("the logical coupling must be nonzero")
    system = _pair_system(pair, transverse, scale, lam, coupling)
    levels = lowest_eigenvalues(system, 3, method=method)

    detuning = 0.0
    if (pair.len_a, pair.bonds_a) != (pair.len_b, pair.bonds_b):
        detuning = _chain_field(
            pair.len_a, pair.bonds_a, transverse, scale, lam, method
        ) - _chain_field(
            pair.len_b, pair.bonds_b, transverse, scale, lam, method
        )

    half_gap = float(levels[2] - levels[1]) / 2
    split2 = half_gap ** 2 - detuning ** 2
    degenerate = 2 * half_gap <= atol or split2 <= atol ** 2
    j_eff = (
        0.0
        if degenerate
        else float(np.sign(coupling) * np.sqrt(split2) / scale)
    )
    return SpectralResult(
        eigenvalues=tuple(levels.tolist()),
        value=j_eff,
        num_qubits=pair.num_qubits,
        transverse=float(transverse),
        scale=float(scale),
        chi=j_eff / coupling,
        degenerate=degenerate,
        detuning=float(detuning),
    )


# /def


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SpectralReport:
    """Per-class spectral susceptibilities of an embedded instance.

    Parameters
    ----------
    gamma : float
        evaluation point, A over ``B lam``
    lam : float
    transverse : float
        A at the evaluation point
    results : dict
        class label -> `SpectralResult`, empty when ``gamma == 0``
    edge_class : dict
        logical edge -> class label

    """

    gamma: float
    lam: float
    transverse: float
    results: Dict[str, SpectralResult]
    edge_class: Dict[_Edge, str]

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(sorted(set(self.edge_class.values())))

    # /def

    @property
    def degenerate(self) -> Tuple[str, ...]:
        return tuple(k for k, r in sorted(self.results.items()) if r.degenerate)

    # /def

    def class_chi(self) -> Dict[str, float]:
        """Class label -> susceptibility; 1 everywhere for rigid chains."""
        if not self.results:
            return {label: 1.0 for label in self.labels}
        return {label: self.results[label].chi for label in self.labels}

    # /def

    def edge_chi(self) -> Dict[_Edge, float]:
        """Logical edge -> its class susceptibility."""
        chi = self.class_chi()
        return {edge: chi[label] for edge, label in self.edge_class.items()}

    # /def

    def to_dict(self) -> Dict[str, Any]:
        counts: Dict[str, int] = {}
        for label in self.edge_class.values():
            counts[label] = counts.get(label, 0) + 1
        chi = self.class_chi()
        classes = {}
        for label in self.labels:
            entry = dict(chi=chi[label], edges=counts[label])
            if label in self.results:
                res = self.results[label]
                entry.update(
                    j_eff=res.value,
                    num_qubits=res.num_qubits,
                    degenerate=res.degenerate,
                )
            classes[label] = entry
        return dict(
            gamma=self.gamma,
            transverse=self.transverse,
            classes=classes,
            **{"lambda": self.lam},
        )

    # /def


# /class


def _class_label(pair: ChainPair) -> str:
    if pair.is_path:
        return pair.label
    bonds = ",".join(f"{i}-{k}" for i, k in pair.bonds_a)
    bonds += "|" + ",".join(f"{i}-{k}" for i, k in pair.bonds_b)
    links = ",".join(f"{i}-{k}" for i, k in pair.links)
    return f"{pair.len_a}x{pair.len_b}:{links}/{bonds}"


# /def


def spectral_report(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
    gamma: float = 1.0,
    *,
    probe: float = 1.0,
) -> SpectralReport:
    """Spectral susceptibility of every connection pattern in use.

    Logical edges are grouped by the automorphism class of their
    two-chain pattern and each class is diagonalized once, with logical
    coupling `probe` at ``A = gamma lam`` and ``B = 1``.

    Raises
    ------
    ValidationError
        the embedding does not fit the instance
    SizeCapError
        a pattern is too large; use the susceptibility method instead

    """
    check = validate(embedding, instance, graph)
    if not check.passed:
        raise ValidationError(
            "embedding does not fit the instance: " + "; ".join(check.failures()),
            report=check,
        )

    edge_class: Dict[_Edge, str] = {}
    members: Dict[str, ChainPair] = {}
    for a, b in instance.couplings:
        pair = chain_pair(embedding, graph, a, b)
        label = _class_label(pair)
        edge_class[(a, b)] = label
        members.setdefault(label, pair)

    cap = int(conf.sparse_qubit_cap)
    largest = max((p.num_qubits for p in members.values()), default=0)
    if largest > cap:
        raise SizeCapError(
            f"chain pairs of {largest} qubits exceed the diagonalization cap "
            f"of {cap}; use the susceptibility method"
        )

    transverse = freeze_out_field(gamma, lam)
    results: Dict[str, SpectralResult] = {}
    if transverse > 0 and members:
        labels = sorted(members)
        with ThreadPoolExecutor(max_workers=max(1, int(conf.max_workers))) as pool:
            found = pool.map(
                lambda k: pair_jeff(
                    members[k], transverse, 1.0, lam, probe
                ),
                labels,
            )
            results = dict(zip(labels, found))

    log.info(
        f"spectral compensation: {len(members)} pattern classes, "
        f"largest {largest} qubits, A={transverse:.4g}"
    )
    return SpectralReport(
        gamma=float(gamma),
        lam=float(lam),
        transverse=transverse,
        results=results,
        edge_class=edge_class,
    )


# /def


def spectral_compensate(
    instance: Instance,
    embedding: Embedding,
    graph: PhysicalGraph,
    lam: float,
    gamma: float = 1.0,
    *,
    probe: float = 1.0,
) -> PhysicalProblem:
    """Compensate logical couplings by their spectral susceptibility.

    ``J_ab N / chi_ab`` with N the geometric mean of the chi, one linear
    pass. Degenerate classes fall back to factor 1. ``gamma = 0`` is the
    rigid-chain limit and gives plain uniform spreading.

    Parameters
    ----------
    instance : `~embedding_util.instances.Instance`
    embedding : `~embedding_util.embedding.Embedding`
    graph : `~embedding_util.topology.PhysicalGraph`
    lam : float
        chain strength
    gamma : float, optional
        evaluation point ``A = gamma B lam``
    probe : float, optional
        logical coupling used to probe each class

    Returns
    -------
    problem : `~embedding_util.compiler.PhysicalProblem`
        unrescaled; the per-class report is under
        ``provenance["spectral"]``

    """
    report = spectral_report(
        instance, embedding, graph, lam, gamma, probe=probe
    )
    class_chi = report.class_chi()

    if report.degenerate:
        good = [
            v for k, v in class_chi.items() if k not in report.degenerate
        ]
        fill = geometric_mean(good) if good else 1.0
        warnings.warn(
            f"degenerate spectra for {len(report.degenerate)} pattern "
            f"classes, left uncompensated: {', '.join(report.degenerate)}",
            AstropyUserWarning,
        )
        class_chi.update({k: fill for k in report.degenerate})

    chi = {e: class_chi[k] for e, k in report.edge_class.items()}
    problem = apply_susceptibilities(
        instance,
        embedding,
        graph,
        lam,
        chi,
        CompensationConfig("spectral", gamma=gamma),
    )
    return dataclasses.replace(
        problem,
        provenance={**problem.provenance, "spectral": report.to_dict()},
    )


# /def


##############################################################################
# END
