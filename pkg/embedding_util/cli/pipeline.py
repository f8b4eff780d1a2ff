# -*- coding: utf-8 -*-

"""End-to-end experiment pipeline.

Routine Listings
----------------
`cell_seed`
`CellResult`
`prepare`
`run_cell`
`summarize`
`run_experiment`

Notes
-----
Output layout of a run::

    <output>/config.json
    <output>/embedding.json
    <output>/instances/instance_<seed>.json
    <output>/cells/cell_<c>/problem_<k>.json
    <output>/cells/cell_<c>/samples_<k>.json
    <output>/cells/cell_<c>/logical_<k>_<mapping>.csv (+ .json)
    <output>/report.csv (+ .json)

Every file depends only on the configuration, so a rerun reproduces the
tree byte for byte.

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "cell_seed",
    "CellResult",
    "prepare",
    "run_cell",
    "summarize",
    "run_experiment",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import os
import pathlib
import shutil
import tempfile
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import astropy.units as u
import numpy as np
from astropy import log
from astropy.table import Table


# PROJECT-SPECIFIC

from .. import conf
from ..compiler import compile_problem
from ..embedding import Embedding, validate
from ..instances import Instance, with_target_energy
from ..metrics import (
    eaee,
    energy_density,
    ensemble_summary,
    success_rate,
    time_to_solution,
)
from ..postprocess import LogicalSampleSet, map_samples
from ..reference import brute_min
from ..sampler import sample
from ..topology import PhysicalGraph
from ..utils import STREAMS, make_rng
from ..utils.exceptions import ConfigError, EmbeddingUtilError, InputError
from ..utils.io import write_json, write_table
from .config import ExperimentConfig


##############################################################################
# PARAMETERS

_PathLike = Union[str, os.PathLike]

_EMPTY_METRICS = dict(
    median_energy=np.nan,
    q25_energy=np.nan,
    q75_energy=np.nan,
    median_density=np.nan,
    success=np.nan,
    tts_anneal=np.nan,
    tts_access=np.nan,
    eaee_variance=np.nan,
)


##############################################################################
# CODE
##############################################################################


def cell_seed(seed: int, cell: int) -> int:
    """Seed of sweep cell `cell`, drawn from stream ``(7, cell)``.

    Examples
    --------
    >>> cell_seed(0, 3) == cell_seed(0, 3)
    True
    >>> cell_seed(0, 3) == cell_seed(0, 4)
    False

    """
    return int(make_rng(seed, STREAMS["cell"], cell).integers(2 ** 62))


# /def


@dataclasses.dataclass
class CellResult:
    """Logical samples of one sweep cell.

    Parameters
    ----------
    index : int
    values : dict
        axis -> value
    logicals : dict
        mapping -> one `LogicalSampleSet` per instance
    error : str, optional
        set if a stage failed; `logicals` is then empty

    """

    index: int
    values: Dict[str, float]
    logicals: Dict[str, List[LogicalSampleSet]] = dataclasses.field(
        default_factory=dict
    )
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    # /def


# /class


# ------------------------------------------------------------------------


def prepare(
    config: ExperimentConfig,
) -> Tuple[List[Instance], PhysicalGraph, Embedding]:
    """Instances, with target energies where they can be had, and embedding.

    Instances without a known target are solved exactly when small
    enough for the brute-force oracle; the rest get a target after the
    run, the best energy any cell found.

    Raises
    ------
    ConfigError
        the embedding does not fit the instances

    """
    instances = config.ensemble.generate()
    try:
        graph, embedding = config.embedding.build(config.ensemble)
    except InputError as e:
        raise ConfigError(str(e), "embedding")

    report = validate(embedding, instances[0], graph)
    if not report.passed:
        raise ConfigError("; ".join(report.failures()), "embedding")

    if config.ensemble.n <= conf.brute_force_cap:
        instances = [
            inst
            if inst.target_energy is not None
            else with_target_energy(inst, brute_min(inst).energy)
            for inst in instances
        ]
    log.info(
        f"{config.name}: {len(instances)} {config.ensemble.kind} instances "
        f"of n={config.ensemble.n} on C{graph.m}, "
        f"chain length {embedding.chain_length}"
    )
    return instances, graph, embedding


# /def


def _write_cell(
    directory: pathlib.Path,
    problems: Sequence,
    samplesets: Sequence,
    logicals: Dict[str, List[LogicalSampleSet]],
):
    for k, (problem, sampleset) in enumerate(zip(problems, samplesets)):
        write_json(directory / f"problem_{k}.json", "problem", problem.to_dict())
        write_json(directory / f"samples_{k}.json", "samples", sampleset.to_dict())
    for method, per_instance in logicals.items():
        tag = method.replace("+", "_")
        for k, logical in enumerate(per_instance):
            logical.write(directory / f"logical_{k}_{tag}.csv")


# /def


def run_cell(
    config: ExperimentConfig,
    index: int,
    values: Dict[str, float],
    instances: Sequence[Instance],
    graph: PhysicalGraph,
    embedding: Embedding,
    output: Optional[pathlib.Path] = None,
) -> CellResult:
    """Compile, sample and map every instance for one sweep cell.

    Package errors are caught and recorded on the result. With `output`
    the cell's files are written to a temporary directory that replaces
    ``cells/cell_<index>`` only when the whole cell succeeded.

    """
    seed = cell_seed(config.seed, index)
    compensation = config.compile.compensation(values.get("inv_xi"))

    params = config.sampler.params
    if "anneal_time" in values:
        params = dataclasses.replace(
            params, sweeps=config.sampler.sweeps_for(values["anneal_time"])
        )
    if "beta" in values:
        params = dataclasses.replace(params, beta=values["beta"])

    problems, samplesets = [], []
    logicals: Dict[str, List[LogicalSampleSet]] = {
        m: [] for m in config.mapping.methods
    }
    try:
        for k, inst in enumerate(instances):
            lam = config.compile.chain_strength(inst, values.get("lambda0"))
            problem = compile_problem(
                inst,
                embedding,
                graph,
                lam=lam,
                config=compensation,
                chain_range=config.compile.chain_range,
            )
            sampleset = sample(
                problem,
                dataclasses.replace(params, seed=seed + k),
                backend=config.sampler.backend,
                endpoint=config.sampler.endpoint,
            )
            for method in config.mapping.methods:
                logicals[method].append(
                    map_samples(
                        method,
                        sampleset,
                        embedding,
                        inst,
                        seed=config.mapping.seed + k,
                    )
                )
            problems.append(problem)
            samplesets.append(sampleset)
    except EmbeddingUtilError as e:
        where = f" in stage {e.stage}" if e.stage else ""
        log.warning(f"cell {index} {values} failed{where}: {e}")
        return CellResult(index, values, error=f"{type(e).__name__}: {e}")

    if output is not None:
        cells = output / "cells"
        cells.mkdir(parents=True, exist_ok=True)
        final = cells / f"cell_{index:03d}"
        staging = pathlib.Path(
            tempfile.mkdtemp(dir=cells, prefix=f".cell_{index:03d}.")
        )
        try:
            _write_cell(staging, problems, samplesets, logicals)
            if final.exists():
                shutil.rmtree(final)
            os.replace(staging, final)
        finally:
            if staging.exists():
                shutil.rmtree(staging)

    log.debug(f"cell {index} {values} done")
    return CellResult(index, values, logicals=logicals)


# /def


# ------------------------------------------------------------------------


def _targets(
    instances: Sequence[Instance], results: Sequence[CellResult]
) -> List[Optional[float]]:
    """Known target energies, or the best energy found in any cell."""
    targets = []
    for k, inst in enumerate(instances):
        if inst.target_energy is not None:
            targets.append(inst.target_energy)
            continue
        found = [
            logicals[k].energies.min()
            for r in results
            for logicals in r.logicals.values()
            if len(logicals[k])
        ]
        targets.append(float(min(found)) if found else None)
    return targets


# /def


def summarize(
    config: ExperimentConfig,
    instances: Sequence[Instance],
    results: Sequence[CellResult],
) -> Table:
    """One report row per cell and mapping.

    Energies are summarized by the median over instances of the
    per-instance mean logical energy; ``success`` is the median success
    rate and ``tts_*`` the median time to solution in microseconds.

    """
    axes = config.sweep.axes
    targets = _targets(instances, results)
    n = config.ensemble.n

    rows: List[Dict[str, Any]] = []
    for result in sorted(results, key=lambda r: r.index):
        timing = config.timing
        if "anneal_time" in result.values:
            timing = timing.with_anneal_time(result.values["anneal_time"])
        for method in config.mapping.methods:
            row: Dict[str, Any] = dict(cell=result.index)
            row.update({a: result.values[a] for a in axes})
            row.update(mapping=method, status="ok" if result.ok else "failed")
            row.update(error=result.error or "")
            row.update(_metrics(result, method, instances, targets, timing, n))
            rows.append(row)

    names = ["cell", *axes, "mapping", "status"] + list(_EMPTY_METRICS) + ["error"]
    table = Table(rows=[[r[c] for c in names] for r in rows], names=names)
    table.meta.update(
        name=config.name,
        axes=list(axes),
        num_instances=len(instances),
        num_cells=len(results),
        num_failed=sum(not r.ok for r in results),
    )
    return table


# /def


def _metrics(
    result: CellResult,
    method: str,
    instances: Sequence[Instance],
    targets: Sequence[Optional[float]],
    timing,
    n: int,
) -> Dict[str, float]:
    out = dict(_EMPTY_METRICS)
    if not result.ok:
        return out
    logicals = result.logicals[method]

    means = [s.energies.mean() for s in logicals if len(s)]
    if means:
        summary = ensemble_summary(means)
        out.update(
            median_energy=summary["median"],
            q25_energy=summary["q25"],
            q75_energy=summary["q75"],
            median_density=float(np.median(energy_density(means, n))),
        )

    rates = [
        success_rate(s, t) if s.num_reads else 0.0
        for s, t in zip(logicals, targets)
        if t is not None
    ]
    if rates:
        p = float(np.median(rates))
        out.update(
            success=p,
            tts_anneal=time_to_solution(p, timing).to_value(u.us),
            tts_access=time_to_solution(p, timing, form="access").to_value(u.us),
        )

    try:
        out["eaee_variance"] = eaee(list(zip(instances, logicals))).variance
    except InputError:
        pass  # differing edge sets or empty sample sets
    return out


# /def


def run_experiment(
    config: ExperimentConfig,
    output: Optional[_PathLike] = None,
    max_workers: Optional[int] = None,
) -> Table:
    """Run every sweep cell of `config` and write the report.

    Parameters
    ----------
    config : `ExperimentConfig`
    output : path-like, optional
        defaults to ``config.output``
    max_workers : int, optional
        concurrent cells, defaults to ``conf.max_workers``

    Returns
    -------
    report : `~astropy.table.Table`
        ``report.meta["num_failed"]`` counts failed cells

    Raises
    ------
    ConfigError
        the configuration cannot be run at all

    """
    output = pathlib.Path(output if output is not None else config.output)
    instances, graph, embedding = prepare(config)

    write_json(output / "config.json", "experiment-config", config.to_dict())
    write_json(output / "embedding.json", "embedding", embedding.to_dict())
    for inst in instances:
        write_json(
            output / "instances" / f"instance_{inst.seed}.json",
            "instance",
            inst.to_dict(),
        )

    cells = config.cells
    workers = max_workers or conf.max_workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(
                run_cell, config, c, values, instances, graph, embedding, output
            )
            for c, values in enumerate(cells)
        ]
        results = [f.result() for f in futures]

    report = summarize(config, instances, results)
    write_table(output / "report.csv", report)
    log.info(
        f"{config.name}: {len(cells)} cells, "
        f"{report.meta['num_failed']} failed, report in {output}"
    )
    return report


# /def


##############################################################################
# END
