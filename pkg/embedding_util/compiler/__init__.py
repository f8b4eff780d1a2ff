# -*- coding: utf-8 -*-

"""Compile Logical Problems into Programmable Physical Problems."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from ._problem import PhysicalProblem, aligned_state
from .susceptibility import (
    chain_distances,
    chi_chain,
    chi_pair,
    chi_pair_summed,
)
from .spreading import (
    METHODS,
    CompensationConfig,
    chain_strength,
    default_chain_strength,
    uniform_spread,
    susceptibilities,
    apply_susceptibilities,
    compensate,
    rescale,
    compile_problem,
)

# import top-level
from . import susceptibility, spreading


##############################################################################
# END
