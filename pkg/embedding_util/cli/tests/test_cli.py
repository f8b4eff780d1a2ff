# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.cli`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import json

import pytest
import numpy as np


# PROJECT-SPECIFIC

from embedding_util.cli import (
    ExperimentConfig,
    cell_seed,
    load_config,
    main,
    pipeline,
    run_experiment,
)
from embedding_util.data import load_preset, preset_names
from embedding_util.instances import Instance
from embedding_util.postprocess import LogicalSampleSet
from embedding_util.reference import brute_min
from embedding_util.utils.exceptions import ConfigError, InputError
from embedding_util.utils.io import read_json, read_table


##############################################################################
# PARAMETERS

SMALL = dict(
    name="small",
    ensemble=dict(kind="CSG", n=8, count=3, seed=0),
    embedding=dict(kind="clique", m=2),
    compile=dict(lambda0=1.6),
    sampler=dict(params=dict(num_reads=20, sweeps=50)),
    mapping=dict(methods=["MV", "GD"]),
    sweep=dict(lambda0=[1.0, 2.0]),
)


def _tree(root):
    """Relative path -> bytes of every file under `root`."""
    return {
        str(p.relative_to(root)): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


# /def


##############################################################################
# CODE
##############################################################################


@pytest.mark.parametrize("name", preset_names())
def test_presets_validate(name):
    config = ExperimentConfig.from_dict(load_preset(name))
    assert config.name == name
    assert ExperimentConfig.from_dict(config.to_dict()) == config


# /def


def test_unknown_preset():
    with pytest.raises(ConfigError, match="unknown preset"):
        load_preset("nope")


# /def


@pytest.mark.parametrize(
    "patch, path",
    [
        (dict(ensemble=dict(kind="CSG", n=0)), "ensemble"),
        (dict(ensemble=dict(kind="XY", n=8)), "ensemble"),
        (dict(ensemble=dict(kind="CSG", n=8, colour="red")), "ensemble"),
        (dict(mapping=dict(methods=["MV", "best"])), "mapping"),
        (dict(sampler=dict(params=dict(num_reads=10, temperature=1))), "sampler.params"),
        (dict(sampler=dict(backend="cloud")), "sampler"),
        (dict(sweep=dict(lambda0=[1.0, -1.0])), "sweep"),
        (dict(sweep=dict(inv_xi=[0.0, 0.5])), "compile.method"),
        (dict(timing=dict(t_a=-5)), "timing"),
        (dict(outputs="x"), ""),
    ],
)
def test_config_errors_carry_path(patch, path):
    doc = {**SMALL, **patch}
    with pytest.raises(ConfigError) as exc:
        ExperimentConfig.from_dict(doc)
    assert exc.value.path == path


# /def


def test_load_config_rejects_bad_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError, match="invalid JSON"):
        load_config(bad)

    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({**SMALL, "ensemble": dict(kind="CSG")}))
    with pytest.raises(ConfigError) as exc:
        load_config(wrong)
    assert str(wrong) in str(exc.value)


# /def


def test_sweep_cells_are_a_cross_product():
    doc = {**SMALL, "sweep": dict(lambda0=[1.0, 2.0], beta=[0.5, 1.0, 2.0])}
    cells = ExperimentConfig.from_dict(doc).cells
    assert len(cells) == 6
    assert cells[0] == dict(lambda0=1.0, beta=0.5)
    assert cells[3] == dict(lambda0=2.0, beta=0.5)
    assert ExperimentConfig.from_dict({**SMALL, "sweep": {}}).cells == [{}]


# /def


def test_cell_seeds_are_distinct():
    seeds = {cell_seed(0, c) for c in range(50)}
    assert len(seeds) == 50
    assert cell_seed(1, 0) != cell_seed(0, 0)


# /def


# ------------------------------------------------------------------------


def test_run_experiment(tmp_path):
    config = ExperimentConfig.from_dict(SMALL)
    report = run_experiment(config, output=tmp_path / "a")

    assert len(report) == 4
    assert list(report["status"]) == ["ok"] * 4
    assert report.meta["num_failed"] == 0
    assert np.all((report["success"] >= 0) & (report["success"] <= 1))
    # greedy descent never raises the energy of the voted states
    mv, gd = report[report["mapping"] == "MV"], report[report["mapping"] == "GD"]
    assert np.all(gd["success"] >= mv["success"])
    assert np.all(gd["median_energy"] <= mv["median_energy"] + 1e-9)

    cell = tmp_path / "a" / "cells" / "cell_001"
    assert (cell / "problem_2.json").exists()
    logical = LogicalSampleSet.read(cell / "logical_0_GD.csv")
    assert len(logical) == 20 and logical.method == "MV+GD"
    assert (tmp_path / "a" / "report.json").exists()
    assert not list((tmp_path / "a" / "cells").glob(".cell_*"))


# /def


def test_rerun_is_bit_identical(tmp_path):
    config = ExperimentConfig.from_dict(SMALL)
    run_experiment(config, output=tmp_path / "a")
    run_experiment(config, output=tmp_path / "b", max_workers=2)
    a, b = _tree(tmp_path / "a"), _tree(tmp_path / "b")
    assert a.keys() == b.keys()
    assert all(a[k] == b[k] for k in a)


# /def


def test_failed_cell_does_not_stop_the_run(tmp_path, monkeypatch):
    original = pipeline.compile_problem

    def fragile(instance, embedding, graph, lam=None, **kwargs):
        if lam > 5:
            raise InputError("chain strength out of range")
        return original(instance, embedding, graph, lam=lam, **kwargs)

    monkeypatch.setattr(pipeline, "compile_problem", fragile)
    config = ExperimentConfig.from_dict(SMALL)
    report = run_experiment(config, output=tmp_path)

    assert report.meta["num_failed"] == 1
    failed = report[report["status"] == "failed"]
    assert set(failed["cell"]) == {1}
    assert "chain strength out of range" in failed["error"][0]
    assert np.isnan(failed["median_energy"][0])
    assert (tmp_path / "cells" / "cell_000").exists()
    assert not (tmp_path / "cells" / "cell_001").exists()


# /def


# ------------------------------------------------------------------------


def test_main_stage_commands(tmp_path):
    inst = tmp_path / "instances"
    assert main(["gen", "--kind", "csg", "--n", "8", "--count", "3",
                 "--seed", "7", "--out", str(inst)]) == 0
    assert sorted(p.name for p in inst.glob("*.json")) == [
        "instance_7.json", "instance_8.json", "instance_9.json"
    ]

    emb = tmp_path / "embedding.json"
    assert main(["embed", "--kind", "clique", "--n", "8", "--out", str(emb)]) == 0

    problem = tmp_path / "problem.json"
    assert main(["compile", "--instance", str(inst / "instance_7.json"),
                 "--embedding", str(emb), "--xi", "L",
                 "--out", str(problem)]) == 0
    doc = json.loads(problem.read_text())
    assert doc["schema"] == "embedding_util/problem"
    assert doc["provenance"]["compensation"]["method"] == "susceptibility"

    samples = tmp_path / "samples.json"
    assert main(["sample", "--problem", str(problem), "--num-reads", "10",
                 "--sweeps", "20", "--out", str(samples)]) == 0

    logical = tmp_path / "logical.csv"
    assert main(["map", "--samples", str(samples), "--embedding", str(emb),
                 "--instance", str(inst / "instance_7.json"),
                 "--method", "GD", "--out", str(logical)]) == 0
    assert len(LogicalSampleSet.read(logical)) == 10


# /def


def test_main_report_against_reference(tmp_path, capsys):
    emb = tmp_path / "embedding.json"
    assert main(["embed", "--kind", "biclique", "--n", "64", "--out", str(emb)]) == 0
    assert main(["report", "--embedding", str(emb), "--against", "table2"]) == 0
    out = capsys.readouterr().out
    assert "pattern_classes: 10 (reference 10) ok" in out

    small = tmp_path / "small.json"
    main(["embed", "--kind", "biclique", "--n", "16", "--out", str(small)])
    assert main(["report", "--embedding", str(small), "--against", "table2"]) == 2


# /def


def test_main_report_metrics(tmp_path):
    inst = tmp_path / "instances"
    assert main(["gen", "--kind", "csg", "--n", "8", "--count", "2",
                 "--out", str(inst)]) == 0
    emb = tmp_path / "embedding.json"
    assert main(["embed", "--kind", "clique", "--n", "8", "--out", str(emb)]) == 0

    instances, logicals = [], []
    for seed in (0, 1):
        instances.append(str(inst / f"instance_{seed}.json"))
        problem = tmp_path / f"problem_{seed}.json"
        samples = tmp_path / f"samples_{seed}.json"
        logicals.append(str(tmp_path / f"logical_{seed}.csv"))
        assert main(["compile", "--instance", instances[-1],
                     "--embedding", str(emb), "--out", str(problem)]) == 0
        assert main(["sample", "--problem", str(problem), "--num-reads", "20",
                     "--sweeps", "50", "--seed", str(seed),
                     "--out", str(samples)]) == 0
        assert main(["map", "--samples", str(samples), "--embedding", str(emb),
                     "--instance", instances[-1], "--method", "GD",
                     "--out", logicals[-1]]) == 0

    out = tmp_path / "metrics.json"
    assert main(["report", "--logical", *logicals, "--instance", *instances,
                 "--embedding", str(emb), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == "embedding_util/metrics"
    assert doc["num_instances"] == len(doc["instances"]) == 2
    assert 0 <= doc["median_success"] <= 1
    assert doc["sts"] >= 1
    assert doc["timing"]["t_a"] == 20.0
    assert doc["eaee"]["num_instances"] == 2
    assert "classes" in doc["eaee"]
    for row, path in zip(doc["instances"], instances):
        target = brute_min(Instance.from_dict(read_json(path))).energy
        assert row["target_energy"] == pytest.approx(target)
        assert row["min_energy"] >= target - 1e-9

    csv = tmp_path / "metrics.csv"
    assert main(["report", "--logical", *logicals, "--instance", *instances,
                 "--t-a", "100", "--out", str(csv)]) == 0
    table = read_table(csv)
    assert len(table) == 2
    assert {"success", "sts", "tts_anneal", "tts_access"} <= set(table.colnames)
    assert table.meta["timing"]["t_a"] == 100.0

    assert main(["report", "--logical", logicals[0], "--instance", *instances]) == 2
    assert main(["report"]) == 2


# /def


def test_main_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({**SMALL, "mapping": dict(methods=["best"])}))
    assert main(["run", "--config", str(bad)]) == 2

    good = tmp_path / "good.json"
    good.write_text(json.dumps({**SMALL, "sweep": {}}))
    assert main(["run", "--config", str(good), "--out", str(tmp_path / "out")]) == 0

    with pytest.raises(SystemExit) as exc:
        main(["run"])
    assert exc.value.code == 2


# /def


##############################################################################
# END
