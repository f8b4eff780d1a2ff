# -*- coding: utf-8 -*-

"""Map Physical Samples to the Logical Space.

Routine Listings
----------------
`LogicalSampleSet`
`map_random`
`map_majority`
`filter_aligned`
`greedy_descent`
`random_logical`
`chain_break_fraction`
`is_local_minimum`
`map_samples`

"""

__author__ = "Nathaniel Starkman"


__all__ = [
    "MAPPINGS",
    "map_samples",
    "LogicalSampleSet",
    # mappings
    "chain_columns",
    "chain_break_fraction",
    "map_random",
    "map_majority",
    "filter_aligned",
    "random_logical",
    # descent
    "greedy_descent",
    "is_local_minimum",
]


##############################################################################
# IMPORTS

# PROJECT-SPECIFIC

from ..embedding import Embedding
from ..instances import Instance
from ..sampler import SampleSet
from ..utils.exceptions import InputError
from ._logical import LogicalSampleSet
from .mappings import (
    chain_columns,
    chain_break_fraction,
    map_random,
    map_majority,
    filter_aligned,
    random_logical,
)
from .descent import greedy_descent, is_local_minimum

# import top-level
from . import mappings, descent  # noqa


##############################################################################
# PARAMETERS

MAPPINGS = ("R", "A", "MV", "GD", "rand+GD")


##############################################################################
# CODE
##############################################################################


def map_samples(
    method: str,
    sampleset: SampleSet,
    embedding: Embedding,
    instance: Instance,
    seed: int = 0,
) -> LogicalSampleSet:
    """Apply a mapping by name.

    "GD" is majority vote followed by greedy descent; "rand+GD" ignores
    the samples except for their count.

    """
    if method == "R":
        return map_random(sampleset, embedding, instance, seed)
    elif method == "A":
        return filter_aligned(sampleset, embedding, instance)
    elif method == "MV":
        return map_majority(sampleset, embedding, instance, seed)
    elif method == "GD":
        voted = map_majority(sampleset, embedding, instance, seed)
        return greedy_descent(voted, instance, seed)
    elif method == "rand+GD":
        return greedy_descent(
            random_logical(instance, len(sampleset), seed), instance, seed
        )
    raise InputError(f"mapping must be one of {MAPPINGS}, not {method!r}")


# /def


##############################################################################
# END
