# -*- coding: utf-8 -*-

"""Draw Physical Spin Samples.

Routine Listings
----------------
`sample`
`remote_sample`
`sample_local`
`SamplerParams`
`SampleSet`
`StubSamplerServer`

core, remote, server : modules

"""

__author__ = "Nathaniel Starkman"


__all__ = [
    "BACKENDS",
    "sample",
    # core
    "MODES",
    "SamplerParams",
    "SampleSet",
    "sample_local",
    "colour_classes",
    # remote
    "ENDPOINT_ENV",
    "resolve_endpoint",
    "remote_sample",
    # server
    "StubSamplerServer",
]


##############################################################################
# IMPORTS

# GENERAL

from typing import Optional


# PROJECT-SPECIFIC

from ..compiler import PhysicalProblem
from ..utils.decorators import stage
from ..utils.exceptions import InputError
from .core import MODES, SamplerParams, SampleSet, sample_local, colour_classes
from .remote import ENDPOINT_ENV, resolve_endpoint, remote_sample
from .server import StubSamplerServer

# import top-level
from . import core, remote, server  # noqa


##############################################################################
# PARAMETERS

BACKENDS = ("local", "remote")


##############################################################################
# CODE
##############################################################################


@stage(name="sample")
def sample(
    problem: PhysicalProblem,
    params: SamplerParams,
    backend: str = "local",
    endpoint: Optional[str] = None,
) -> SampleSet:
    """Sample `problem` with the chosen backend.

    Parameters
    ----------
    problem : `~embedding_util.compiler.PhysicalProblem`
    params : `SamplerParams`
    backend : {"local", "remote"}, optional
    endpoint : str, optional
        remote only, see :func:`resolve_endpoint`

    Returns
    -------
    `SampleSet`

    """
    if backend == "local":
        return sample_local(problem, params)
    elif backend == "remote":
        return remote_sample(problem, params, endpoint)
    raise InputError(f"backend must be one of {BACKENDS}, not {backend!r}")


# /def


##############################################################################
# END
