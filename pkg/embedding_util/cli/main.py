# -*- coding: utf-8 -*-

"""Command-line interface.

Each stage subcommand reads the files of the stages before it and writes
its own; ``run`` executes a whole experiment from a configuration file
or a shipped preset.

Exit codes are 0 on success, 1 if a stage or some sweep cell failed and
2 for invalid configuration or input.

Routine Listings
----------------
`make_parser`
`main`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["make_parser", "main"]


##############################################################################
# IMPORTS

# GENERAL

import argparse
import pathlib
from typing import Any, Dict, List, Optional

import astropy.units as u
import numpy as np
from astropy import log
from astropy.table import Table


# PROJECT-SPECIFIC

from .. import conf
from ..compiler import PhysicalProblem, compile_problem
from ..data import expected_layout, load_preset, preset_names
from ..embedding import Embedding
from ..instances import Instance
from ..metrics import (
    TimingModel,
    eaee,
    ensemble_summary,
    pattern_classes,
    samples_to_solution,
    success_rate,
    time_to_solution,
)
from ..postprocess import MAPPINGS, LogicalSampleSet, map_samples
from ..reference import brute_min
from ..sampler import BACKENDS, MODES, SampleSet, SamplerParams, sample
from ..topology import build_chimera
from ..utils.exceptions import ConfigError, EmbeddingUtilError, InputError
from ..utils.io import read_json, write_json, write_table
from .config import (
    CompileSpec,
    EmbeddingSpec,
    EnsembleSpec,
    ExperimentConfig,
    load_config,
)
from .pipeline import run_experiment


##############################################################################
# PARAMETERS

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


##############################################################################
# CODE
##############################################################################


def _xi(value: str):
    """``--xi`` accepts a number, "L" or "inf"."""
    if value in ("L", "inf"):
        return value
    return float(value)


# /def


def _ensemble(args) -> EnsembleSpec:
    return EnsembleSpec(
        kind=args.kind.upper(),
        n=args.n,
        count=getattr(args, "count", 1),
        seed=getattr(args, "seed", 0),
        dims=tuple(args.dims) if args.dims else None,
        load=getattr(args, "load", 1.4),
        snr_db=getattr(args, "snr_db", 7.0),
    )


# /def


def _graph_for(embedding: Embedding, m: Optional[int]):
    m = m or embedding.params.get("m")
    if m is None:
        raise ConfigError("the embedding file has no Chimera size, pass --m", "m")
    return build_chimera(m)


# /def


# ------------------------------------------------------------------------
# subcommands


def cmd_gen(args) -> int:
    """Write one instance file per seed."""
    out = pathlib.Path(args.out)
    for inst in _ensemble(args).generate():
        write_json(out / f"instance_{inst.seed}.json", "instance", inst.to_dict())
    print(f"wrote {args.count} instances to {out}")
    return EXIT_OK


# /def


def cmd_embed(args) -> int:
    """Write the generated embedding."""
    ensemble_kind = dict(clique="CSG", biclique="BSG", cubic="3DSG")[args.kind]
    ensemble = EnsembleSpec(
        kind=ensemble_kind,
        n=args.n,
        count=1,
        dims=tuple(args.dims) if args.dims else None,
    )
    graph, embedding = EmbeddingSpec(kind=args.kind, m=args.m).build(ensemble)
    write_json(args.out, "embedding", embedding.to_dict())
    print(
        f"{args.kind} embedding of {len(embedding)} chains on C{graph.m}, "
        f"chain length {embedding.chain_length} -> {args.out}"
    )
    return EXIT_OK


# /def


def cmd_compile(args) -> int:
    """Compile an instance file with an embedding file."""
    instance = Instance.from_dict(read_json(args.instance, "instance"))
    embedding = Embedding.from_dict(read_json(args.embedding, "embedding"))
    graph = _graph_for(embedding, args.m)

    method = args.method or ("susceptibility" if args.xi is not None else "none")
    spec = CompileSpec(
        lambda0=args.lambda0,
        lam=args.lam,
        method=method,
        xi=args.xi if args.xi is not None else "L",
        gamma=args.gamma,
        chain_range=args.chain_range,
    )
    problem = compile_problem(
        instance,
        embedding,
        graph,
        lam=spec.chain_strength(instance),
        config=spec.compensation(),
        chain_range=spec.chain_range,
    )
    write_json(args.out, "problem", problem.to_dict())
    print(
        f"lambda={problem.lam:.4g} R={problem.scale:.4g} "
        f"{problem.num_qubits} qubits -> {args.out}"
    )
    return EXIT_OK


# /def


def cmd_sample(args) -> int:
    """Sample a problem file."""
    problem = PhysicalProblem.from_dict(read_json(args.problem, "problem"))
    params = SamplerParams(
        num_reads=args.num_reads,
        mode=args.mode,
        sweeps=args.sweeps,
        beta_start=args.beta_start,
        beta_end=args.beta_end,
        beta=args.beta,
        seed=args.seed,
        check_energy=args.check_energy,
    )
    sampleset = sample(problem, params, backend=args.backend, endpoint=args.endpoint)
    write_json(args.out, "samples", sampleset.to_dict())
    print(
        f"{len(sampleset)} reads, lowest energy {sampleset.energies.min():.6g} "
        f"-> {args.out}"
    )
    return EXIT_OK


# /def


def cmd_map(args) -> int:
    """Map a sample file to logical states."""
    sampleset = SampleSet.from_dict(read_json(args.samples, "samples"))
    embedding = Embedding.from_dict(read_json(args.embedding, "embedding"))
    instance = Instance.from_dict(read_json(args.instance, "instance"))
    logical = map_samples(args.method, sampleset, embedding, instance, args.seed)
    logical.write(args.out)
    print(f"{len(logical)} {logical.method} samples -> {args.out}")
    return EXIT_OK


# /def


def _instance_metrics(
    instance: Instance,
    logical: LogicalSampleSet,
    timing: TimingModel,
    confidence: float,
) -> Dict[str, Any]:
    """One report row; success columns are NaN without a target energy."""
    logical.verify(instance)
    target = instance.target_energy
    if target is None and instance.n <= conf.brute_force_cap:
        target = brute_min(instance).energy

    row = dict(
        instance=instance.id,
        seed=-1 if instance.seed is None else instance.seed,
        method=logical.method,
        num_samples=len(logical),
        mean_energy=float(logical.energies.mean()) if len(logical) else np.nan,
        min_energy=float(logical.energies.min()) if len(logical) else np.nan,
        target_energy=np.nan if target is None else float(target),
        success=np.nan,
        sts=np.nan,
        tts_anneal=np.nan,
        tts_access=np.nan,
    )
    if target is not None and logical.num_reads:
        p = success_rate(logical, target)
        row.update(
            success=p,
            sts=samples_to_solution(p, confidence),
            tts_anneal=time_to_solution(p, timing, confidence).to_value(u.us),
            tts_access=time_to_solution(
                p, timing, confidence, form="access"
            ).to_value(u.us),
        )
    return row


# /def


def _report_metrics(args) -> int:
    """Success, samples-to-solution, timing and edge energies of
    logical-sample files, one row per instance."""
    if len(args.logical) != len(args.instance):
        raise InputError(
            f"{len(args.logical)} logical-sample files for "
            f"{len(args.instance)} instance files"
        )
    instances = [Instance.from_dict(read_json(p, "instance")) for p in args.instance]
    logicals = [LogicalSampleSet.read(p) for p in args.logical]
    timing = TimingModel(t_a=args.t_a)

    rows = [
        _instance_metrics(inst, logical, timing, args.confidence)
        for inst, logical in zip(instances, logicals)
    ]
    table = Table({key: [row[key] for row in rows] for key in rows[0]})

    summary: Dict[str, Any] = dict(
        num_instances=len(rows), confidence=args.confidence
    )
    rates = [r["success"] for r in rows if np.isfinite(r["success"])]
    if rates:
        p = float(np.median(rates))
        summary.update(
            median_success=p,
            success_quartiles=ensemble_summary(rates),
            sts=samples_to_solution(p, args.confidence),
            tts_anneal=time_to_solution(p, timing, args.confidence).to_value(u.us),
            tts_access=time_to_solution(
                p, timing, args.confidence, form="access"
            ).to_value(u.us),
        )

    classes = None
    if args.embedding is not None:
        embedding = Embedding.from_dict(read_json(args.embedding, "embedding"))
        classes = pattern_classes(embedding, _graph_for(embedding, args.m))
    try:
        energies = eaee(list(zip(instances, logicals)), classes)
    except InputError as e:
        log.warning(f"no edge energies: {e}")
    else:
        summary["eaee"] = energies.to_dict()

    table.meta.update(summary, timing=timing.to_dict())
    table.pprint(max_lines=-1, max_width=-1)
    if args.out is None:
        return EXIT_OK
    if pathlib.Path(args.out).suffix == ".json":
        doc = dict(summary, timing=timing.to_dict(), instances=rows)
        write_json(args.out, "metrics", doc)
    else:
        write_table(args.out, table)
    print(f"metrics of {len(rows)} instances -> {args.out}")
    return EXIT_OK


# /def


def cmd_report(args) -> int:
    """Pattern classes of an embedding file, optionally checked, or the
    metrics of logical-sample files."""
    if args.logical:
        return _report_metrics(args)
    if args.instance:
        raise InputError("--instance needs --logical")
    if args.embedding is None:
        raise InputError("report needs --embedding or --logical")

    embedding = Embedding.from_dict(read_json(args.embedding, "embedding"))
    graph = _graph_for(embedding, args.m)
    classes = pattern_classes(embedding, graph)

    table = Table(
        dict(
            pattern=[c.label for c in classes],
            chi=[c.chi for c in classes],
            edges=[len(c) for c in classes],
        )
    )
    table.meta.update(
        kind=embedding.kind, n=len(embedding), chain_length=embedding.chain_length
    )
    if args.out:
        write_table(args.out, table)
    table.pprint(max_lines=-1)

    if args.against is None:
        return EXIT_OK

    expected = expected_layout(embedding.kind, len(embedding))
    if expected is None:
        raise ConfigError(
            f"no reference row for {embedding.kind} n={len(embedding)}",
            "against",
        )
    found = dict(chain_length=embedding.chain_length, pattern_classes=len(classes))
    status = EXIT_OK
    for key, value in found.items():
        match = "ok" if value == expected[key] else "MISMATCH"
        print(f"{key}: {value} (reference {expected[key]}) {match}")
        if value != expected[key]:
            status = EXIT_FAILED
    return status


# /def


def cmd_run(args) -> int:
    """Run an experiment."""
    if args.preset is not None:
        config = ExperimentConfig.from_dict(load_preset(args.preset))
    else:
        config = load_config(args.config)
    report = run_experiment(config, output=args.out, max_workers=args.workers)
    report.pprint(max_lines=-1, max_width=-1)
    return EXIT_FAILED if report.meta["num_failed"] else EXIT_OK


# /def


# ------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per pipeline stage."""
    parser = argparse.ArgumentParser(
        prog="embedding-util",
        description="Compile, sample and analyse chain-embedded Ising problems.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at DEBUG level"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate instance files")
    p.add_argument(
        "--kind",
        required=True,
        type=str.lower,
        choices=["csg", "bsg", "3dsg", "cdma"],
    )
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--dims", type=int, nargs=3, metavar=("LX", "LY", "LZ"))
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="seed of the first instance")
    p.add_argument("--load", type=float, default=1.4, help="CDMA chips per user")
    p.add_argument("--snr-db", type=float, default=7.0, help="CDMA SNR in dB")
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("embed", help="generate an embedding file")
    p.add_argument("--kind", required=True, choices=["clique", "biclique", "cubic"])
    p.add_argument("--n", type=int)
    p.add_argument("--dims", type=int, nargs=3, metavar=("LX", "LY", "LZ"))
    p.add_argument("--m", type=int, help="Chimera size, default the smallest that fits")
    p.add_argument("--out", default="embedding.json")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("compile", help="compile an instance for an embedding")
    p.add_argument("--instance", required=True)
    p.add_argument("--embedding", required=True)
    p.add_argument("--m", type=int)
    strength = p.add_mutually_exclusive_group()
    strength.add_argument(
        "--lambda0", type=float, help="chain strength / sqrt(sigma^2 N)"
    )
    strength.add_argument("--lam", type=float, help="absolute chain strength")
    p.add_argument("--method", choices=["none", "susceptibility", "spectral"])
    p.add_argument("--xi", type=_xi, help='correlation length, a number, "L" or "inf"')
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--chain-range", type=float, default=2.0)
    p.add_argument("--out", default="problem.json")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("sample", help="sample a compiled problem")
    p.add_argument("--problem", required=True)
    p.add_argument("--num-reads", type=int, default=100)
    p.add_argument("--mode", choices=MODES, default="anneal")
    p.add_argument("--sweeps", type=int, default=1000)
    p.add_argument("--beta-start", type=float, default=0.1)
    p.add_argument("--beta-end", type=float, default=10.0)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check-energy", action="store_true")
    p.add_argument("--backend", choices=BACKENDS, default="local")
    p.add_argument("--endpoint", help="remote sampler URL")
    p.add_argument("--out", default="samples.json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("map", help="map samples to logical states")
    p.add_argument("--samples", required=True)
    p.add_argument("--embedding", required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--method", choices=MAPPINGS, default="MV")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="logical.csv")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser(
        "report",
        help="pattern classes of an embedding, or metrics of logical samples",
    )
    p.add_argument("--embedding")
    p.add_argument("--m", type=int)
    p.add_argument(
        "--against", choices=["table2"], help="compare with reference counts"
    )
    p.add_argument("--logical", nargs="+", help="logical-sample CSV files")
    p.add_argument(
        "--instance", nargs="+", help="instance files, one per --logical file"
    )
    p.add_argument(
        "--t-a", type=float, default=20.0, help="anneal time in microseconds"
    )
    p.add_argument("--confidence", type=float, default=0.99)
    p.add_argument(
        "--out", help="write the table as CSV, or the metrics as .json"
    )
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("run", help="run an experiment")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", help="experiment configuration file")
    source.add_argument("--preset", choices=preset_names())
    p.add_argument("--out", help="output directory, default from the configuration")
    p.add_argument("--workers", type=int, help="concurrent sweep cells")
    p.set_defaults(func=cmd_run)

    return parser


# /def


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of ``embedding-util``.

    Returns
    -------
    int
        the exit code

    """
    args = make_parser().parse_args(argv)
    if args.verbose:
        log.setLevel("DEBUG")

    try:
        return args.func(args)
    except (ConfigError, InputError) as e:
        log.error(str(e))
        return EXIT_CONFIG
    except EmbeddingUtilError as e:
        where = f"{e.stage}: " if e.stage else ""
        log.error(f"{where}{e}")
        return EXIT_FAILED


# /def


##############################################################################
# END
