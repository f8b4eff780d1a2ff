# -*- coding: utf-8 -*-
# see LICENSE.rst

"""Compile, sample and analyse chain-embedded Ising problems on Chimera.

Routine Listings
----------------
conf : configuration

utils, topology, instances, embedding, compiler, spectral, sampler,
postprocess, metrics, reference, cli, data

"""

__author__ = "Nathaniel Starkman"
__license__ = "BSD-3"


__all__ = ["conf"]


##############################################################################
# IMPORTS

# Packages may add whatever they like to this file, but
# should keep this content at the top.
from ._astropy_init import *  # noqa

# GENERAL

from astropy import config as _config


##############################################################################
# CONFIGURATION


class Conf(_config.ConfigNamespace):
    """Configuration parameters for `embedding_util`."""

    sampler_endpoint = _config.ConfigItem(
        "",
        "Default sampler service URL. The EMBEDDING_UTIL_SAMPLER_ENDPOINT "
        "environment variable takes precedence.",
        cfgtype="string",
    )
    remote_timeout = _config.ConfigItem(
        30.0, "Seconds before a remote sampling job is abandoned."
    )
    remote_poll_interval = _config.ConfigItem(
        0.1, "Seconds between polls of a remote sampling job."
    )
    max_workers = _config.ConfigItem(
        1, "Worker threads for pipeline cells and per-instance work."
    )
    dense_qubit_cap = _config.ConfigItem(
        14, "Largest system diagonalized with dense linear algebra."
    )
    sparse_qubit_cap = _config.ConfigItem(
        24, "Largest system diagonalized at all."
    )
    brute_force_cap = _config.ConfigItem(
        24, "Largest instance solved by exhaustive enumeration."
    )
    sampler_read_block = _config.ConfigItem(
        256, "Reads sharing one random stream in the local sampler."
    )


# /class


conf = Conf()


# PROJECT-SPECIFIC

from .instances import Instance, energy
from .topology import PhysicalGraph, build_chimera
from .embedding import Embedding, validate
from .compiler import PhysicalProblem, CompensationConfig, compile_problem
from .sampler import SampleSet, SamplerParams, sample
from .postprocess import LogicalSampleSet

# Import top-level modules for __all__
from . import (  # noqa
    data,
    utils,
    topology,
    instances,
    embedding,
    compiler,
    spectral,
    sampler,
    postprocess,
    metrics,
    reference,
    cli,
)


##############################################################################
# __ALL__

__all__ += [
    # topology
    "PhysicalGraph",
    "build_chimera",
    # instances
    "Instance",
    "energy",
    # embedding
    "Embedding",
    "validate",
    # compiler
    "PhysicalProblem",
    "CompensationConfig",
    "compile_problem",
    # sampler
    "SampleSet",
    "SamplerParams",
    "sample",
    # postprocess
    "LogicalSampleSet",
]


##############################################################################
# END
