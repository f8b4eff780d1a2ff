# -*- coding: utf-8 -*-

"""Client for a Remote Sampling Service.

Wire protocol, JSON over HTTP:

- ``POST {endpoint}/jobs`` with ``{"problem": ..., "params": ...}``
  answers ``{"job_id": ...}``; a 400 answer with
  ``{"error": "range_violation", "message": ...}`` rejects the problem.
- ``GET {endpoint}/jobs/{job_id}`` answers ``{"status": ...}``; status is
  one of "pending", "running", "done" or "failed". Finished jobs add
  ``"samples"`` (rows of +-1 over the problem's qubits) and
  ``"energies"``; failed jobs add ``"error"`` and ``"message"``.

Routine Listings
----------------
`ENDPOINT_ENV`
`resolve_endpoint`
`remote_sample`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["ENDPOINT_ENV", "resolve_endpoint", "remote_sample"]


##############################################################################
# IMPORTS

# GENERAL

import os
import time
from typing import Any, Dict, Optional

import requests
from astropy import log


# PROJECT-SPECIFIC

from .. import conf
from ..compiler import PhysicalProblem
from ..utils.exceptions import (
    InputError,
    MalformedResponseError,
    RangeViolationError,
    RemoteNetworkError,
    RemoteSamplerError,
    RemoteTimeoutError,
    SamplerError,
)
from .core import SampleSet, SamplerParams


##############################################################################
# PARAMETERS

ENDPOINT_ENV = "EMBEDDING_UTIL_SAMPLER_ENDPOINT"

_PENDING = ("pending", "running")


##############################################################################
# CODE
##############################################################################


def resolve_endpoint(endpoint: Optional[str] = None) -> str:
    """Sampler URL from the argument, the environment or the configuration.

    Raises
    ------
    InputError
        none of the three is set

    """
    url = endpoint or os.environ.get(ENDPOINT_ENV) or conf.sampler_endpoint
    if not url:
        raise InputError(
            f"no sampler endpoint: pass one or set {ENDPOINT_ENV}"
        )
    return url.rstrip("/")


# /def


def _decode(response: requests.Response) -> Dict[str, Any]:
    try:
        doc = response.json()
    except ValueError:
        raise MalformedResponseError(
            f"non-JSON answer from {response.url} ({response.status_code})"
        )
    if not isinstance(doc, dict):
        raise MalformedResponseError(f"expected a JSON object from {response.url}")
    return doc


# /def


def _raise_for_error(doc: Dict[str, Any], status_code: int) -> None:
    error = doc.get("error")
    message = doc.get("message", "")
    if error == "range_violation":
        raise RangeViolationError(f"server rejected the problem: {message}")
    if error is not None or status_code >= 400:
        raise RemoteSamplerError(
            f"server error {status_code} ({error}): {message}"
        )


# /def


def _request(session, method, url, deadline, **kwargs):
    remaining = deadline - time.monotonic()
    if remaining <= 0:
        raise RemoteTimeoutError(f"no result from {url} before the deadline")
    try:
        return session.request(method, url, timeout=remaining, **kwargs)
    except requests.Timeout:
        raise RemoteTimeoutError(f"{method} {url} timed out")
    except requests.ConnectionError as e:
        raise RemoteNetworkError(f"cannot reach {url}: {e}")
    except requests.RequestException as e:
        raise RemoteNetworkError(f"{method} {url} failed: {e}")


# /def


def _run_job(session, url, payload, deadline, poll_interval) -> Dict[str, Any]:
    """Submit one job and poll it until done; the final answer document."""
    response = _request(session, "POST", f"{url}/jobs", deadline, json=payload)
    doc = _decode(response)
    _raise_for_error(doc, response.status_code)
    try:
        job_id = str(doc["job_id"])
    except KeyError:
        raise MalformedResponseError("submission answer has no 'job_id'")
    log.debug(f"submitted job {job_id} to {url}")

    while True:
        response = _request(session, "GET", f"{url}/jobs/{job_id}", deadline)
        doc = _decode(response)
        _raise_for_error(doc, response.status_code)
        status = doc.get("status")
        if status == "done":
            return doc
        if status == "failed":
            raise RemoteSamplerError(f"job {job_id} failed")
        if status not in _PENDING:
            raise MalformedResponseError(f"unknown job status {status!r}")
        if time.monotonic() + poll_interval > deadline:
            raise RemoteTimeoutError(f"job {job_id} not done before the deadline")
        time.sleep(poll_interval)


# /def


def remote_sample(
    problem: PhysicalProblem,
    params: SamplerParams,
    endpoint: Optional[str] = None,
    *,
    timeout: Optional[float] = None,
    poll_interval: Optional[float] = None,
    session: Optional[requests.Session] = None,
) -> SampleSet:
    """Submit `problem` to a sampling service and wait for the result.

    Parameters
    ----------
    problem : `~embedding_util.compiler.PhysicalProblem`
    params : `~embedding_util.sampler.SamplerParams`
    endpoint : str, optional
        service URL, see :func:`resolve_endpoint`
    timeout : float, optional
        seconds for the whole job, default ``conf.remote_timeout``
    poll_interval : float, optional
        seconds between status polls, default ``conf.remote_poll_interval``
    session : `requests.Session`, optional
        reused and left open; without one a session is opened for this
        job and closed before returning

    Returns
    -------
    sampleset : `~embedding_util.sampler.SampleSet`
        energies checked against the problem

    Raises
    ------
    RemoteNetworkError
        the service cannot be reached
    RangeViolationError
        the service rejected the programmed values
    MalformedResponseError
        a reply is not JSON, lacks keys, or carries samples that do not
        match the problem
    RemoteTimeoutError
        the job is not done within `timeout`

    """
    url = resolve_endpoint(endpoint)
    timeout = float(conf.remote_timeout if timeout is None else timeout)
    poll_interval = float(
        conf.remote_poll_interval if poll_interval is None else poll_interval
    )
    deadline = time.monotonic() + timeout
    payload = dict(problem=problem.to_dict(), params=params.to_dict())

    if session is None:
        with requests.Session() as own:
            doc = _run_job(own, url, payload, deadline, poll_interval)
    else:
        doc = _run_job(session, url, payload, deadline, poll_interval)

    try:
        sampleset = SampleSet(
            problem_id=problem.id,
            qubits=problem.qubits,
            samples=doc["samples"],
            energies=doc["energies"],
            params=params,
            read_block=doc.get("read_block", conf.sampler_read_block),
            backend="remote",
        )
        sampleset.verify(problem)
    except KeyError as e:
        raise MalformedResponseError(f"job answer missing key {e}")
    except (InputError, SamplerError, ValueError) as e:
        raise MalformedResponseError(f"job answer does not fit the problem: {e}")
    return sampleset


# /def


##############################################################################
# END
