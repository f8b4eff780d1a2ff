# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.metrics`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import collections

import pytest
import numpy as np
import astropy.units as u
from astropy.tests.helper import assert_quantity_allclose
from numpy.testing import assert_allclose
from scipy.stats import spearmanr


# PROJECT-SPECIFIC

from embedding_util.compiler import CompensationConfig, compensate
from embedding_util.embedding import (
    Embedding,
    embed_biclique,
    embed_clique,
    embed_cubic,
)
from embedding_util.instances import cubic_edges, gen_cdma, gen_csg
from embedding_util.metrics import (
    TimingModel,
    access_time,
    anneal_time_rule,
    bootstrap_interval,
    eaee,
    edge_classes,
    energy_density,
    ensemble_summary,
    pattern_classes,
    samples_in_budget,
    samples_to_solution,
    success_rate,
    time_to_solution,
    update_count_histogram,
)
from embedding_util.postprocess import (
    LogicalSampleSet,
    map_majority,
    random_logical,
)
from embedding_util.reference import spin_states
from embedding_util.sampler import SamplerParams, sample_local
from embedding_util.topology import build_chimera
from embedding_util.utils.exceptions import InputError


##############################################################################
# PARAMETERS

C4 = build_chimera(4)


def _logical(energies):
    energies = np.asarray(energies, dtype=float)
    return LogicalSampleSet(np.ones((len(energies), 1)), energies, "MV")


# /def


def _gibbs_samples(instance, beta, num, rng):
    states = spin_states(instance.n, 0, 2 ** instance.n)
    energies = instance.energies(states)
    weights = np.exp(-beta * (energies - energies.min()))
    pick = rng.choice(len(states), size=num, p=weights / weights.sum())
    return LogicalSampleSet(states[pick], energies[pick], "exact")


# /def


@pytest.fixture(scope="module")
def csg16_edge_energies():
    """Equilibrium edge energies of CSG16 on C4, uncompensated and
    compensated at the chain-length correlation length."""
    emb = embed_clique(16, C4)
    lam = 2.0  # soft chains, beta lam = 0.5
    configs = dict(
        plain=CompensationConfig("susceptibility", xi=np.inf),
        compensated=CompensationConfig("susceptibility", xi="L"),
    )
    ensembles = {key: [] for key in configs}
    for seed in range(60):
        inst = gen_csg(16, seed)
        params = SamplerParams(
            2000, mode="equilibrium", sweeps=40, beta=0.25, seed=seed
        )
        for key, config in configs.items():
            reads = sample_local(compensate(inst, emb, C4, lam, config), params)
            ensembles[key].append((inst, map_majority(reads, emb, inst, seed)))
    classes = pattern_classes(emb, C4)
    return {key: eaee(ens, classes) for key, ens in ensembles.items()}


# /def


##############################################################################
# CODE
##############################################################################


def test_success_rate():
    assert success_rate(_logical([-4.0] * 5), -4.0) == 1.0
    assert success_rate(_logical([-2.0] * 5), -4.0) == 0.0
    assert success_rate(_logical([-4.0] * 3 + [0.0] * 9), -4.0) == 0.25
    with pytest.raises(InputError):
        success_rate(_logical([]), -4.0)
    with pytest.raises(InputError):
        success_rate(_logical([1.0]), None)


# /def


def test_success_rate_counts_discarded_reads():
    kept = LogicalSampleSet(
        np.ones((3, 1)), [-4.0, -4.0, 0.0], "A", provenance=dict(num_reads=8)
    )
    assert kept.num_reads == 8
    assert success_rate(kept, -4.0) == 0.25

    nothing_kept = LogicalSampleSet(
        np.ones((0, 1)), [], "A", provenance=dict(num_reads=8)
    )
    assert success_rate(nothing_kept, -4.0) == 0.0


# /def


def test_samples_to_solution():
    assert samples_to_solution(0.5, 0.99) == pytest.approx(6.6439, abs=1e-4)
    assert samples_to_solution(0.0) == np.inf
    assert samples_to_solution(1.0) == 1.0
    ps = np.linspace(0.05, 0.95, 10)
    assert np.all(np.diff([samples_to_solution(p) for p in ps]) < 0)
    xs = np.linspace(0.5, 0.999, 10)
    assert np.all(np.diff([samples_to_solution(0.3, x) for x in xs]) > 0)
    with pytest.raises(InputError):
        samples_to_solution(1.2)
    with pytest.raises(InputError):
        samples_to_solution(0.5, 1.0)


# /def


# ------------------------------------------------------------------------


def test_timing_model_defaults_and_units():
    timing = TimingModel()
    assert_quantity_allclose(timing.t_p, 10 * u.ms)
    assert_quantity_allclose(timing.t_rd, 219 * u.us)
    assert timing.t_m == timing.t_n == 0 * u.us
    assert_quantity_allclose(TimingModel(t_p=0.02 * u.s).t_p, 20000 * u.us)
    assert timing.to_dict()["t_rd"] == 219.0
    with pytest.raises(InputError):
        TimingModel(t_a=-1.0)


# /def


def test_access_time_and_budget():
    timing = TimingModel(t_a=219)
    assert_quantity_allclose(access_time(0, timing), timing.t_p)
    total = access_time(2283, timing).to_value(u.s)
    assert 1.005 <= total <= 1.015
    assert samples_in_budget(1 * u.s, timing) == 2283
    assert samples_in_budget(10 ** 6, timing) == 2283
    assert anneal_time_rule(timing) == 219 * u.us
    assert timing.with_anneal_time(anneal_time_rule(timing)).t_a == timing.t_rd


# /def


def test_time_to_solution_forms():
    timing = TimingModel(t_a=20)
    n = samples_to_solution(0.5)
    assert time_to_solution(0.5, timing).to_value(u.us) == pytest.approx(20 * n)
    assert time_to_solution(0.5, timing, form="access") == access_time(n, timing)
    assert np.isinf(time_to_solution(0.0, timing).value)
    assert np.isinf(time_to_solution(0.0, timing, form="access").value)
    with pytest.raises(InputError):
        time_to_solution(0.5, timing, form="wall")


# /def


# ------------------------------------------------------------------------


def test_energy_density():
    assert_allclose(energy_density([-8.0, 0.0], 4), [-1.0, 0.0])
    assert_allclose(energy_density([-8.0], 4, reference=-8.0), [0.0])


# /def


def test_update_count_histogram():
    a = LogicalSampleSet(np.ones((3, 2)), [0, 0, 0], "GD", gd_updates=[0, 2, 2])
    b = LogicalSampleSet(np.ones((1, 2)), [0], "GD", gd_updates=[1])
    assert update_count_histogram([a, b]).tolist() == [1, 1, 2]


# /def


def test_ensemble_summary():
    summary = ensemble_summary([1.0, 2.0, 3.0, 4.0, 100.0])
    assert summary["median"] == 3.0
    assert summary["mean"] == 22.0
    assert summary["count"] == 5

    unsolved = ensemble_summary([1.0, np.inf, np.inf, np.inf])
    assert unsolved["median"] == np.inf
    assert unsolved["q75"] == np.inf
    with pytest.raises(InputError):
        ensemble_summary([])


# /def


def test_bootstrap_interval_is_reproducible():
    values = np.random.default_rng(1).normal(size=50)
    lo, hi = bootstrap_interval(values, seed=3)
    assert lo < np.median(values) < hi
    assert (lo, hi) == bootstrap_interval(values, seed=3)
    wide = bootstrap_interval(values, confidence=0.99, seed=3)
    assert wide[0] <= lo and hi <= wide[1]


# /def


# ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "generator, arg, m, num_classes",
    [
        (embed_clique, 32, 8, 18),
        (embed_clique, 64, 16, 51),
        (embed_biclique, 64, 8, 10),
        (embed_cubic, (4, 4, 4), 8, 3),
        (embed_cubic, (2, 2, 3), 4, 3),
        (embed_cubic, (2, 2, 2), 4, 2),
    ],
)
def test_pattern_class_counts(generator, arg, m, num_classes):
    graph = build_chimera(m)
    classes = pattern_classes(generator(arg, graph), graph)
    assert len(classes) == num_classes
    chis = [c.chi for c in classes]
    assert chis == sorted(chis)
    assert all(0 < chi <= 1 for chi in chis)
    members = edge_classes(classes)
    assert len(members) == sum(len(c) for c in classes)


# /def


def test_cubic_lattice_link_classes():
    # one chain pair per column when Lz=2, so one z pattern; the x and y
    # links both join an end qubit to its neighbour
    graph = build_chimera(4)
    dims = (2, 2, 2)
    classes = pattern_classes(embed_cubic(dims, graph), graph)
    members = edge_classes(classes)
    edges = [tuple(e) for e in cubic_edges(dims).tolist()]
    assert sorted(members) == sorted(edges)

    along_z = {members[e] for e in edges if e[1] - e[0] == 1}
    across = {members[e] for e in edges if e[1] - e[0] > 1}
    assert len(along_z) == 1 and len(across) == 1
    assert along_z != across

    # a third layer adds the second z pattern
    deeper = pattern_classes(embed_cubic((2, 2, 3), graph), graph)
    assert len(deeper) == 3


# /def


def test_pattern_classes_ignore_labels_and_chain_direction():
    emb = embed_clique(16, C4)
    base = pattern_classes(emb, C4)

    perm = np.random.default_rng(0).permutation(len(emb))
    shuffled = Embedding([emb.chains[p] for p in perm])
    reversed_ = Embedding([c[::-1] for c in emb.chains])
    for other in (shuffled, reversed_):
        classes = pattern_classes(other, C4)
        assert collections.Counter({c.label: len(c) for c in classes}) == (
            collections.Counter({c.label: len(c) for c in base})
        )
        assert_allclose([c.chi for c in classes], [c.chi for c in base])


# /def


# ------------------------------------------------------------------------


def test_edge_mean_matches_mean_energy():
    ensemble = []
    for seed in range(20):
        inst = gen_csg(6, seed)
        ensemble.append((inst, random_logical(inst, 40, seed=seed)))
    result = eaee(ensemble)
    mean_energy = np.mean([logical.energies.mean() for _, logical in ensemble])
    assert result.mean == pytest.approx(mean_energy / 15, abs=1e-9)
    assert len(result.to_table()) == 15


# /def


def test_exact_sampler_gives_uniform_edge_energies():
    rng = np.random.default_rng(5)
    exact, biased = [], []
    for seed in range(300):
        inst = gen_csg(6, seed)
        logical = _gibbs_samples(inst, 1.0, 200, rng)
        exact.append((inst, logical))
        # decouple variable 0 from the rest
        states = np.array(logical.states)
        states[:, 0] = rng.choice([-1, 1], size=len(states))
        biased.append(
            (inst, LogicalSampleSet(states, inst.energies(states), "biased"))
        )
    fair = eaee(exact)
    skewed = eaee(biased)
    assert fair.variance < 2e-3
    assert skewed.variance > 5 * fair.variance

    _, hi = fair.variance_interval(num_resamples=200)
    assert hi < skewed.variance_interval(num_resamples=200)[0]


# /def


def test_decoded_cdma_edges_average_to_zero():
    ensemble = []
    for seed in range(300):
        inst = gen_cdma(8, seed=seed)
        bits = inst.cdma.bits[None, :]
        ensemble.append((inst, LogicalSampleSet(bits, inst.energies(bits), "b")))
    result = eaee(ensemble)
    sigma = result.per_instance.std(axis=0) / np.sqrt(len(ensemble))
    assert np.all(np.abs(result.values) < 4 * sigma)


# /def


def test_eaee_class_means():
    graph = build_chimera(2)
    classes = pattern_classes(embed_clique(8, graph), graph)
    ensemble = []
    for seed in range(3):
        inst = gen_csg(8, seed)
        ensemble.append((inst, random_logical(inst, 10, seed=seed)))
    result = eaee(ensemble, classes)
    means = result.class_means()
    assert set(means) == {c.label for c in classes}
    assert set(result.to_dict()["classes"]) == set(means)
    assert "pattern" in result.to_table().colnames


# /def


def test_compensation_narrows_edge_energy_spread(csg16_edge_energies):
    plain = csg16_edge_energies["plain"]
    compensated = csg16_edge_energies["compensated"]
    assert plain.mean < 0 and compensated.mean < 0
    assert compensated.variance < plain.variance


# /def


def test_weakly_connected_classes_are_most_frustrated(csg16_edge_energies):
    plain = csg16_edge_energies["plain"]
    means = plain.class_means()
    chis = [c.chi for c in plain.classes]
    values = [means[c.label] for c in plain.classes]
    # classes come ordered by chi, the peripheral pattern first
    assert values[0] > values[-1]
    rho, _ = spearmanr(chis, values)
    assert rho < 0


# /def


def test_eaee_rejects_mismatched_edges():
    a, b = gen_csg(6, 0), gen_csg(5, 0)
    with pytest.raises(InputError):
        eaee([(a, random_logical(a, 2)), (b, random_logical(b, 2))])
    with pytest.raises(InputError):
        eaee([])


# /def


##############################################################################
# END
