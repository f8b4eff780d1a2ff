# -*- coding: utf-8 -*-

"""Tests for :mod:`~embedding_util.sampler`."""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

# GENERAL

import pytest
import numpy as np
from numpy.testing import assert_allclose, assert_array_equal


# PROJECT-SPECIFIC

from embedding_util import conf
from embedding_util.compiler import (
    PhysicalProblem,
    aligned_state,
    compile_problem,
    uniform_spread,
)
from embedding_util.embedding import Embedding, embed_clique
from embedding_util.instances import Instance, gen_csg
from embedding_util.reference import brute_min, spin_states
from embedding_util.sampler import (
    ENDPOINT_ENV,
    SampleSet,
    SamplerParams,
    StubSamplerServer,
    colour_classes,
    remote_sample,
    sample,
    sample_local,
)
from embedding_util.sampler import remote
from embedding_util.topology import build_chimera
from embedding_util.utils.exceptions import (
    InputError,
    MalformedResponseError,
    RangeViolationError,
    RemoteNetworkError,
    RemoteTimeoutError,
    SamplerError,
)


##############################################################################
# PARAMETERS

C1 = build_chimera(1)
C2 = build_chimera(2)
C4 = build_chimera(4)


def _two_qubits(j=0.5, h=(0.3, -0.2)):
    return PhysicalProblem(
        graph=C1,
        qubits=[0, 4],
        h=list(h),
        couplers=[(0, 4)],
        j=[j],
        chain=[False],
        lam=1.0,
    )


# /def


class _FakeResponse:
    def __init__(self, doc=None, status_code=200):
        self._doc = doc
        self.status_code = status_code
        self.url = "http://fake"

    def json(self):
        if self._doc is None:
            raise ValueError("not JSON")
        return self._doc


# /class


class _FakeSession:
    def __init__(self, *responses):
        self.responses = list(responses)

    def request(self, method, url, **kwargs):
        return self.responses.pop(0)


# /class


class _ClosingSession(_FakeSession):
    def __init__(self, *responses):
        super().__init__(*responses)
        self.closed = False

    def close(self):
        self.closed = True

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


# /class


##############################################################################
# CODE
##############################################################################


def test_params_validation():
    with pytest.raises(InputError):
        SamplerParams(0)
    with pytest.raises(InputError):
        SamplerParams(10, mode="quantum")
    with pytest.raises(InputError):
        SamplerParams(10, beta_start=2.0, beta_end=1.0)
    with pytest.raises(InputError):
        SamplerParams(10, mode="equilibrium", beta=0.0)
    with pytest.raises(InputError):
        SamplerParams.from_dict(dict(num_reads=3, temperature=1.0))

    params = SamplerParams(10, sweeps=5, beta_start=1.0, beta_end=16.0)
    assert_allclose(params.schedule, [1.0, 2.0, 4.0, 8.0, 16.0])
    assert SamplerParams.from_dict(params.to_dict()) == params


# /def


def test_colour_classes_share_no_coupler():
    problem = compile_problem(gen_csg(8, 0), embed_clique(8, C2), C2)
    classes = colour_classes(problem)
    colour = np.empty(problem.num_qubits, dtype=int)
    for k, cols in enumerate(classes):
        colour[cols] = k
    a, b = problem.columns.T
    assert np.all(colour[a] != colour[b])
    assert sorted(np.concatenate(classes).tolist()) == list(range(problem.num_qubits))
    # Chimera is bipartite
    assert len(classes) == 2


# /def


def test_single_qubit_follows_its_field():
    problem = PhysicalProblem(
        graph=C1, qubits=[0], h=[-2.0], couplers=[], j=[], chain=[], lam=1.0
    )
    params = SamplerParams(200, mode="equilibrium", sweeps=10, beta=5.0)
    result = sample_local(problem, params)
    assert result.samples.shape == (200, 1)
    assert np.all(result.samples == 1)
    assert_allclose(result.energies, -2.0)


# /def


@pytest.mark.parametrize("mode", ["equilibrium", "anneal"])
def test_two_qubits_reach_boltzmann_distribution(mode):
    problem = _two_qubits()
    beta = 1.0
    params = SamplerParams(
        40000, mode=mode, sweeps=100, beta=beta, beta_start=beta, beta_end=beta
    )
    result = sample_local(problem, params)

    states = spin_states(2, 0, 4)
    weights = np.exp(-beta * problem.energies(states))
    exact = weights / weights.sum()
    codes = ((1 - result.samples.astype(int)) // 2) @ np.array([1, 2])
    freq = np.bincount(codes, minlength=4) / len(result)
    sigma = np.sqrt(exact * (1 - exact) / len(result))
    assert np.all(np.abs(freq - exact) < 4 * sigma)


# /def


def test_chain_correlations_decay_as_tanh_powers():
    beta, lam = 1.0, 0.5
    # vertical run down column 0, an induced path
    chain = [0, 32, 64, 96]
    problem = uniform_spread(
        Instance.from_couplings(1, {}), Embedding([chain]), C4, lam
    )
    params = SamplerParams(20000, mode="equilibrium", sweeps=60, beta=beta)
    z = sample_local(problem, params).samples.astype(float)
    z = z[:, [problem.index[q] for q in chain]]
    measured = z.T @ z / len(z)
    dist = np.abs(np.subtract.outer(np.arange(4), np.arange(4)))
    exact = np.tanh(beta * lam) ** dist
    assert np.all(np.abs(measured - exact) < 5 / np.sqrt(len(z)))


# /def


def test_equilibrium_reads_forget_their_start():
    chain = [0, 32, 64, 96]
    problem = uniform_spread(
        Instance.from_couplings(1, {}), Embedding([chain]), C4, 1.0
    )
    params = SamplerParams(200, mode="equilibrium", sweeps=60, beta=5.0)
    result = sample_local(problem, params)

    # uniform starts are almost never aligned; the kept states are relaxed
    z = result.samples[:, [problem.index[q] for q in chain]]
    aligned = np.all(z == z[:, :1], axis=1)
    assert aligned.mean() > 0.95
    assert 0.3 < (z[:, 0] == 1).mean() < 0.7

    with pytest.raises(InputError):
        SamplerParams.from_dict(dict(params.to_dict(), burn_in=30))


# /def


def test_reads_do_not_depend_on_read_count_or_workers():
    problem = compile_problem(gen_csg(8, 1), embed_clique(8, C2), C2)
    with conf.set_temp("sampler_read_block", 4):
        few = sample_local(problem, SamplerParams(7, sweeps=20, seed=3))
        with conf.set_temp("max_workers", 3):
            many = sample_local(problem, SamplerParams(13, sweeps=20, seed=3))
    assert_array_equal(many.samples[:7], few.samples)
    assert_array_equal(many.energies[:7], few.energies)
    assert many.streams[:6] == [
        (2, 0, 0), (2, 0, 1), (2, 0, 2), (2, 0, 3), (2, 1, 0), (2, 1, 1)
    ]

    other = sample_local(problem, SamplerParams(7, sweeps=20, seed=4))
    assert not np.array_equal(other.samples, few.samples)


# /def


def test_running_energy_is_checked():
    problem = compile_problem(gen_csg(8, 2), embed_clique(8, C2), C2)
    result = sample_local(
        problem, SamplerParams(10, sweeps=50, check_energy=True)
    )
    result.verify(problem)


# /def


def test_anneal_finds_ground_state():
    inst = gen_csg(8, 5)
    emb = embed_clique(8, C2)
    problem = compile_problem(inst, emb, C2)
    target = problem.energy(aligned_state(problem, emb, brute_min(inst).state))

    result = sample(problem, SamplerParams(100, sweeps=1000, seed=1))
    assert result.energies.min() == pytest.approx(target, abs=1e-9)
    assert np.sum(result.energies <= target + 1e-9) >= 25


# /def


def test_best_of_reads_solves_csg16():
    emb = embed_clique(16, C4)
    solved = 0
    for seed in range(100):
        inst = gen_csg(16, seed)
        problem = compile_problem(inst, emb, C4)
        state = aligned_state(problem, emb, brute_min(inst).state)
        target = problem.energy(state)
        params = SamplerParams(100, sweeps=1000, seed=seed)
        best = sample_local(problem, params).energies.min()
        solved += int(best <= target + 1e-9)

    # counted per instance on the best of its reads
    assert solved >= 99


# /def


def test_sampleset_checks():
    problem = _two_qubits()
    result = sample_local(problem, SamplerParams(5, sweeps=3))
    doc = result.to_dict()
    assert doc["problem"] == problem.id
    assert_array_equal(SampleSet.from_dict(doc).samples, result.samples)

    doc["energies"] = [e + 1.0 for e in doc["energies"]]
    with pytest.raises(SamplerError):
        SampleSet.from_dict(doc).verify(problem)
    with pytest.raises(SamplerError):
        SampleSet(problem.id, [0, 4], [[1, 1]], [0.5], SamplerParams(2))
    with pytest.raises(InputError):
        sample(problem, SamplerParams(2), backend="qpu")


# /def


# ------------------------------------------------------------------------
# remote backend


def test_remote_round_trip():
    problem = compile_problem(gen_csg(8, 1), embed_clique(8, C2), C2)
    params = SamplerParams(12, sweeps=30, seed=9)
    with StubSamplerServer() as server:
        remote = remote_sample(problem, params, server.endpoint, poll_interval=0.01)
    local = sample_local(problem, params)
    assert remote.backend == "remote"
    assert_array_equal(remote.samples, local.samples)
    assert_array_equal(remote.energies, local.energies)
    assert remote.problem_id == local.problem_id


# /def


def test_remote_endpoint_from_environment(monkeypatch):
    problem = _two_qubits()
    with StubSamplerServer() as server:
        monkeypatch.setenv(ENDPOINT_ENV, server.endpoint)
        result = sample(problem, SamplerParams(3, sweeps=5), backend="remote")
    assert len(result) == 3

    monkeypatch.delenv(ENDPOINT_ENV)
    with pytest.raises(InputError):
        remote_sample(problem, SamplerParams(3))


# /def


def test_remote_range_violation():
    problem = _two_qubits(j=1.5)
    with StubSamplerServer() as server:
        with pytest.raises(RangeViolationError, match="coupler 1.5"):
            remote_sample(problem, SamplerParams(3), server.endpoint)


# /def


def test_remote_timeout():
    problem = _two_qubits()
    with StubSamplerServer(delay=2.0) as server:
        with pytest.raises(RemoteTimeoutError):
            remote_sample(
                problem,
                SamplerParams(3),
                server.endpoint,
                timeout=0.3,
                poll_interval=0.05,
            )


# /def


def test_remote_unreachable():
    server = StubSamplerServer().start()
    endpoint = server.endpoint
    server.stop()
    with pytest.raises(RemoteNetworkError):
        remote_sample(_two_qubits(), SamplerParams(3), endpoint, timeout=2.0)


# /def


def test_remote_malformed_answers():
    problem = _two_qubits()
    params = SamplerParams(2)
    with pytest.raises(MalformedResponseError):
        remote_sample(
            problem, params, "http://fake", session=_FakeSession(_FakeResponse())
        )
    with pytest.raises(MalformedResponseError, match="job_id"):
        remote_sample(
            problem,
            params,
            "http://fake",
            session=_FakeSession(_FakeResponse(dict(id="x"))),
        )
    done = dict(status="done", samples=[[1, 1]], energies=[0.6])
    with pytest.raises(MalformedResponseError):
        remote_sample(
            problem,
            params,
            "http://fake",
            session=_FakeSession(_FakeResponse(dict(job_id="1")), _FakeResponse(done)),
        )


# /def


def test_remote_closes_only_its_own_session(monkeypatch):
    problem = _two_qubits()
    params = SamplerParams(1)
    done = dict(
        status="done",
        samples=[[1, -1]],
        energies=problem.energies([[1, -1]]).tolist(),
    )
    answers = [
        [_FakeResponse(dict(job_id="1")), _FakeResponse(done)],
        [_FakeResponse()],
    ]
    opened = []

    def make_session():
        opened.append(_ClosingSession(*answers[len(opened)]))
        return opened[-1]

    monkeypatch.setattr(remote.requests, "Session", make_session)
    result = remote_sample(problem, params, "http://fake")
    assert result.backend == "remote"
    assert len(opened) == 1 and opened[0].closed

    # closed on failure too
    with pytest.raises(MalformedResponseError):
        remote_sample(problem, params, "http://fake")
    assert len(opened) == 2 and opened[1].closed

    mine = _ClosingSession(_FakeResponse(dict(job_id="2")), _FakeResponse(done))
    remote_sample(problem, params, "http://fake", session=mine)
    assert not mine.closed


# /def


##############################################################################
# END
