# -*- coding: utf-8 -*-

"""Minor Embeddings of Logical Problems into Chimera."""

__author__ = "Nathaniel Starkman"

##############################################################################
# IMPORTS

from ._embedding import (
    Embedding,
    ValidationReport,
    validate,
    coupler_map,
    connecting_couplers,
    coupler_count_histogram,
)
from .patterns import ChainPair, chain_pair
from .generators import (
    embed_clique,
    embed_biclique,
    embed_cubic,
    clique_corner_sequence,
)

# import top-level
from . import generators, patterns


##############################################################################
# END
