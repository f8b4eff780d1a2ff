# -*- coding: utf-8 -*-

"""Chimera Hardware Topology."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from .chimera import (
    VERTICAL,
    HORIZONTAL,
    PhysicalGraph,
    build_chimera,
    subgraph_distance,
    chimera_id,
    chimera_coordinate,
)

# import top-level
from . import chimera


##############################################################################
# END
