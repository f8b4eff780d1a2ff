# -*- coding: utf-8 -*-

"""Command-Line Pipeline and Experiment Configuration.

Routine Listings
----------------
config : `ExperimentConfig` and its sections
pipeline : `run_experiment`
main : the ``embedding-util`` command

"""

__author__ = "Nathaniel Starkman"


##############################################################################
# IMPORTS

from .config import (
    AXES,
    EnsembleSpec,
    EmbeddingSpec,
    CompileSpec,
    SamplerSpec,
    MappingSpec,
    SweepSpec,
    ExperimentConfig,
    load_config,
)
from .pipeline import CellResult, cell_seed, run_cell, run_experiment, summarize
from .main import main, make_parser

# import top-level
from . import config, pipeline  # noqa


##############################################################################
# END
