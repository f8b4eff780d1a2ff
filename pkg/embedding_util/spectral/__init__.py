# -*- coding: utf-8 -*-

"""Exact Spectra of Embedded Chains and Spectral Compensation."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from .operators import (
    IsingSystem,
    diagonal,
    hamiltonian,
    lowest_eigenvalues,
)
from .compensation import (
    SpectralResult,
    SpectralReport,
    freeze_out_field,
    chain_gap,
    pair_jeff,
    spectral_report,
    spectral_compensate,
)

# import top-level
from . import operators, compensation


##############################################################################
# END
