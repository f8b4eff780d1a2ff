# -*- coding: utf-8 -*-

"""Loopback Sampling Service.

A minimal in-process implementation of the service side of the wire
protocol in :mod:`~embedding_util.sampler.remote`, backed by the local
sampler. It checks programmed values against the hardware ranges before
accepting a job.

Routine Listings
----------------
`StubSamplerServer`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["StubSamplerServer"]


##############################################################################
# IMPORTS

# GENERAL

import itertools
import json
import threading
import time
from concurrent.futures import Future, ThreadPoolExecutor
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any, Dict

from astropy import log


# PROJECT-SPECIFIC

from ..compiler import PhysicalProblem
from ..utils.exceptions import EmbeddingUtilError
from .core import SamplerParams, sample_local


##############################################################################
# CODE
##############################################################################


class _Handler(BaseHTTPRequestHandler):

    server: "_Server"

    def log_message(self, format, *args):  # route through astropy
        log.debug("stub sampler: " + format % args)

    # /def

    def _reply(self, code: int, doc: Dict[str, Any]) -> None:
        body = json.dumps(doc).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    # /def

    def do_POST(self):
        if self.path.rstrip("/") != "/jobs":
            return self._reply(404, dict(error="not_found", message=self.path))
        try:
            length = int(self.headers.get("Content-Length", 0))
            doc = json.loads(self.rfile.read(length))
            problem = PhysicalProblem.from_dict(doc["problem"])
            params = SamplerParams.from_dict(doc["params"])
        except (ValueError, KeyError, TypeError, EmbeddingUtilError) as e:
            return self._reply(400, dict(error="bad_request", message=str(e)))

        violations = problem.check_ranges()
        if violations:
            return self._reply(
                400, dict(error="range_violation", message="; ".join(violations))
            )
        job_id = self.server.owner.submit(problem, params)
        self._reply(202, dict(job_id=job_id))

    # /def

    def do_GET(self):
        prefix = "/jobs/"
        if not self.path.startswith(prefix):
            return self._reply(404, dict(error="not_found", message=self.path))
        job = self.server.owner.jobs.get(self.path[len(prefix):])
        if job is None:
            return self._reply(404, dict(error="unknown_job", message=self.path))
        if not job.done():
            return self._reply(200, dict(status="running"))
        if job.exception() is not None:
            return self._reply(
                200,
                dict(status="failed", error="sampler", message=str(job.exception())),
            )
        sampleset = job.result()
        self._reply(
            200,
            dict(
                status="done",
                samples=sampleset.samples.tolist(),
                energies=sampleset.energies.tolist(),
                read_block=sampleset.read_block,
            ),
        )

    # /def


# /class


class _Server(ThreadingHTTPServer):
    daemon_threads = True
    owner: "StubSamplerServer"


# /class


# ------------------------------------------------------------------------


class StubSamplerServer:
    """Sampling service on the loopback interface.

    Parameters
    ----------
    delay : float, optional
        seconds every job waits before sampling
    host : str, optional
    port : int, optional
        0 (default) picks a free port

    Examples
    --------
    Used as a context manager; `endpoint` is the URL to pass to
    :func:`~embedding_util.sampler.remote_sample`.

    >>> with StubSamplerServer() as server:  # doctest: +SKIP
    ...     remote_sample(problem, params, server.endpoint)

    """

    def __init__(self, delay: float = 0.0, host: str = "127.0.0.1", port: int = 0):
        self.delay = float(delay)
        self.jobs: Dict[str, Future] = {}
        self._ids = itertools.count()
        self._pool = ThreadPoolExecutor(max_workers=1)
        self._httpd = _Server((host, port), _Handler)
        self._httpd.owner = self
        self._thread = threading.Thread(
            target=self._httpd.serve_forever, daemon=True
        )

    # /def

    @property
    def endpoint(self) -> str:
        host, port = self._httpd.server_address[:2]
        return f"http://{host}:{port}"

    # /def

    def submit(self, problem: PhysicalProblem, params: SamplerParams) -> str:
        def run():
            if self.delay:
                time.sleep(self.delay)
            return sample_local(problem, params)

        job_id = f"job-{next(self._ids)}"
        self.jobs[job_id] = self._pool.submit(run)
        return job_id

    # /def

    def start(self) -> "StubSamplerServer":
        self._thread.start()
        log.debug(f"stub sampler listening on {self.endpoint}")
        return self

    # /def

    def stop(self) -> None:
        self._httpd.shutdown()
        self._httpd.server_close()
        self._pool.shutdown(wait=False, cancel_futures=True)

    # /def

    def __enter__(self) -> "StubSamplerServer":
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()

    # /def


# /class


##############################################################################
# END
