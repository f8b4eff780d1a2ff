# -*- coding: utf-8 -*-

"""Logical Ising Instances and Problem Ensembles."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from ._instance import (
    KINDS,
    Instance,
    CDMAPayload,
    energy,
    with_target_energy,
)
from .generators import (
    gen_csg,
    gen_bsg,
    gen_3dsg,
    gen_cdma,
    cubic_site,
    cubic_edges,
    cdma_noise_variance,
)

# import top-level
from . import generators


##############################################################################
# END
