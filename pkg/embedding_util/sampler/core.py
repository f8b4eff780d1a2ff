# -*- coding: utf-8 -*-

"""Local Monte Carlo Sampling of Physical Problems.

The local backend is a classical stand-in for an annealer. Reads are
simulated in blocks of ``conf.sampler_read_block`` lanes that share one
random stream, ``(2, block)``; read ``r`` is lane ``r % B`` of block
``r // B``, so a read depends only on the seed and its index.

Each sweep updates the qubits one colour class at a time. Qubits of a
class share no coupler, so a class is updated simultaneously and a sweep
is still a valid single-spin sweep.

Routine Listings
----------------
`SamplerParams`
`SampleSet`
`sample_local`
`colour_classes`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "MODES",
    "SamplerParams",
    "SampleSet",
    "sample_local",
    "colour_classes",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import functools
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Mapping, Tuple

import networkx as nx
import numpy as np
from astropy import log


# PROJECT-SPECIFIC

from .. import conf
from ..compiler import PhysicalProblem
from ..utils import STREAMS, make_rng
from ..utils.exceptions import InputError, SamplerError


##############################################################################
# PARAMETERS

MODES = ("anneal", "equilibrium")


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class SamplerParams:
    """Sampler settings.

    Parameters
    ----------
    num_reads : int
    mode : {"anneal", "equilibrium"}, optional
        "anneal" runs Metropolis sweeps over a geometric inverse-temperature
        schedule from `beta_start` to `beta_end`; "equilibrium" runs
        heat-bath sweeps at fixed `beta`. Either way a read keeps only its
        state after the last sweep and discards every earlier one
    sweeps : int, optional
    beta_start, beta_end : float, optional
        anneal schedule ends, ``beta_end >= beta_start > 0``
    beta : float, optional
        equilibrium inverse temperature
    seed : int, optional
    check_energy : bool, optional
        compare the running energies against a full recomputation
        after every sweep

    """

    num_reads: int
    mode: str = "anneal"
    sweeps: int = 1000
    beta_start: float = 0.1
    beta_end: float = 10.0
    beta: float = 1.0
    seed: int = 0
    check_energy: bool = False

    def __post_init__(self):
        if int(self.num_reads) != self.num_reads or self.num_reads < 1:
            raise InputError(
                f"num_reads must be a positive integer, not {self.num_reads}"
            )
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, not {self.mode!r}")
        if int(self.sweeps) != self.sweeps or self.sweeps < 1:
            raise InputError(f"sweeps must be a positive integer, not {self.sweeps}")
        if not (0 < self.beta_start <= self.beta_end):
            raise InputError(
                "need beta_end >= beta_start > 0, got "
                f"({self.beta_start}, {self.beta_end})"
            )
        if not self.beta > 0:
            raise InputError(f"beta must be positive, not {self.beta}")
        if int(self.seed) < 0:
            raise InputError(f"seed must be non-negative, not {self.seed}")

    # /def

    @property
    def schedule(self) -> np.ndarray:
        """Inverse temperature of every sweep."""
        if self.mode == "anneal":
            return np.geomspace(self.beta_start, self.beta_end, self.sweeps)
        return np.full(self.sweeps, float(self.beta))

    # /def

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self)

    # /def

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "SamplerParams":
        fields = {f.name for f in dataclasses.fields(cls)}
        unknown = set(doc) - fields
        if unknown:
            raise InputError(f"unknown sampler parameters {sorted(unknown)}")
        return cls(**doc)

    # /def


# /class


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True, eq=False)
class SampleSet:
    """Physical samples of one problem.

    Parameters
    ----------
    problem_id : str
        provenance id of the sampled `~embedding_util.compiler.PhysicalProblem`
    qubits : (Q,) ndarray of int
        sample columns
    samples : (S, Q) ndarray of int8
    energies : (S,) ndarray
        programmed energies
    params : `SamplerParams`
    read_block : int, optional
        lanes per random stream
    backend : str, optional

    """

    problem_id: str
    qubits: np.ndarray
    samples: np.ndarray
    energies: np.ndarray
    params: SamplerParams
    read_block: int = 256
    backend: str = "local"

    def __post_init__(self):
        qubits = np.array(self.qubits, dtype=np.int64).reshape(-1)
        samples = np.array(self.samples, dtype=np.int8).reshape(-1, len(qubits))
        energies = np.array(self.energies, dtype=float).reshape(-1)
        if len(samples) != len(energies):
            raise InputError("samples and energies differ in length")
        if len(samples) != self.params.num_reads:
            raise SamplerError(
                f"{len(samples)} samples for {self.params.num_reads} reads"
            )
        for arr in (qubits, samples, energies):
            arr.setflags(write=False)
        object.__setattr__(self, "qubits", qubits)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "energies", energies)

    # /def

    def __len__(self) -> int:
        return len(self.samples)

    # /def

    @property
    def streams(self) -> List[Tuple[int, int, int]]:
        """Per-read ``(stream prefix, block, lane)``."""
        b = self.read_block
        return [
            (STREAMS["sampler"], r // b, r % b) for r in range(len(self))
        ]

    # /def

    def verify(self, problem: PhysicalProblem, atol: float = 1e-9) -> None:
        """Check the samples belong to `problem` and their energies.

        Raises
        ------
        SamplerError
            on any mismatch

        """
        if not np.array_equal(self.qubits, problem.qubits):
            raise SamplerError("sample columns differ from the problem's qubits")
        if len(self) == 0:
            return
        diff = np.abs(problem.energies(self.samples) - self.energies).max()
        if diff > atol:
            raise SamplerError(f"sample energies off by {diff:.3g}")

    # /def

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            problem=self.problem_id,
            backend=self.backend,
            qubits=self.qubits.tolist(),
            samples=self.samples.tolist(),
            energies=self.energies.tolist(),
            params=self.params.to_dict(),
            read_block=self.read_block,
        )

    # /def

    @classmethod
    def from_dict(cls, doc: Mapping[str, Any]) -> "SampleSet":
        try:
            return cls(
                problem_id=doc["problem"],
                qubits=doc["qubits"],
                samples=doc["samples"],
                energies=doc["energies"],
                params=SamplerParams.from_dict(doc["params"]),
                read_block=doc.get("read_block", 256),
                backend=doc.get("backend", "local"),
            )
        except KeyError as e:
            raise InputError(f"sample document missing key {e}")

    # /def


# /class


# ------------------------------------------------------------------------


def colour_classes(problem: PhysicalProblem) -> Tuple[np.ndarray, ...]:
    """Sample-array columns grouped into classes sharing no coupler."""
    graph = nx.Graph()
    graph.add_nodes_from(range(problem.num_qubits))
    graph.add_edges_from(map(tuple, problem.columns.tolist()))
    colours = nx.coloring.greedy_color(graph, strategy="DSATUR")
    out: Dict[int, List[int]] = {}
    for col in sorted(colours):
        out.setdefault(colours[col], []).append(col)
    return tuple(np.array(out[k], dtype=np.int64) for k in sorted(out))


# /def


def _run_block(
    problem: PhysicalProblem,
    params: SamplerParams,
    block: int,
    lanes: int,
    classes: Tuple[np.ndarray, ...],
) -> Tuple[np.ndarray, np.ndarray]:
    """Simulate `lanes` reads sharing the stream of `block`."""
    rng = make_rng(params.seed, STREAMS["sampler"], block)
    adjacency = problem.adjacency
    rows = [adjacency[c] for c in classes]
    h = problem.h

    z = rng.choice(np.array([-1.0, 1.0]), size=(lanes, problem.num_qubits))
    energy = problem.energies(z)

    for beta in params.schedule:
        for cols, mat in zip(classes, rows):
            field = h[cols] + (mat @ z.T).T  # (lanes, |cols|)
            u = rng.random((lanes, len(cols)))
            current = z[:, cols]
            if params.mode == "anneal":
                delta = -2.0 * current * field
                flip = u < np.exp(np.minimum(0.0, -beta * delta))
                new = np.where(flip, -current, current)
            else:
                # heat bath: P(+1) = 1 / (1 + exp(2 beta field))
                up = u < 0.5 * (1.0 - np.tanh(beta * field))
                new = np.where(up, 1.0, -1.0)
            energy += ((new - current) * field).sum(axis=1)
            z[:, cols] = new

        if params.check_energy:
            diff = np.abs(problem.energies(z) - energy).max()
            if diff > 1e-9 * max(1.0, np.abs(energy).max()):
                raise SamplerError(
                    f"running energy drifted by {diff:.3g} in block {block}"
                )

    return z.astype(np.int8), energy


# /def


def sample_local(problem: PhysicalProblem, params: SamplerParams) -> SampleSet:
    """Sample `problem` with the local Monte Carlo backend.

    Parameters
    ----------
    problem : `~embedding_util.compiler.PhysicalProblem`
    params : `SamplerParams`

    Returns
    -------
    sampleset : `SampleSet`
        reads in index order; the energies are recomputed from the
        final states

    """
    block_size = int(conf.sampler_read_block)
    if block_size < 1:
        raise InputError(f"sampler_read_block must be positive, not {block_size}")
    classes = colour_classes(problem)
    num_blocks = -(-params.num_reads // block_size)

    run = functools.partial(
        _run_block, problem, params, lanes=block_size, classes=classes
    )
    with ThreadPoolExecutor(max_workers=max(1, int(conf.max_workers))) as pool:
        blocks = list(pool.map(run, range(num_blocks)))

    samples = np.concatenate([z for z, _ in blocks])[: params.num_reads]
    energies = problem.energies(samples)
    log.debug(
        f"sampled {params.num_reads} reads x {params.sweeps} sweeps "
        f"({params.mode}), best E={energies.min():.6g}"
    )
    return SampleSet(
        problem_id=problem.id,
        qubits=problem.qubits,
        samples=samples,
        energies=energies,
        params=params,
        read_block=block_size,
    )


# /def


##############################################################################
# END
