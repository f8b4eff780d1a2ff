# -*- coding: utf-8 -*-

"""Brute-Force and Transfer-Matrix Reference Oracles."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from .enumeration import (
    OracleResult,
    spin_states,
    brute_min,
    gibbs_correlations,
    two_chain_gibbs_correlations,
)
from .transfer import chain_gibbs_correlations, chain_xi

# import top-level
from . import enumeration, transfer


##############################################################################
# END
