# -*- coding: utf-8 -*-

"""Connection-Pattern Classes of an Embedding.

Two logical edges are in the same class when the two-chain subgraphs
realizing them are the same up to reversing either chain and swapping
the chains.

Routine Listings
----------------
`PatternClass`
`pattern_classes`
`edge_classes`

"""

__author__ = "Nathaniel Starkman"

__all__ = ["PatternClass", "pattern_classes", "edge_classes"]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
from typing import Any, Dict, List, Tuple

from astropy import log


# PROJECT-SPECIFIC

from ..compiler import chi_pair
from ..embedding import ChainPair, Embedding, chain_pair, coupler_map
from ..topology import PhysicalGraph


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class PatternClass:
    """One connection pattern and the logical edges that share it.

    Parameters
    ----------
    pattern : `~embedding_util.embedding.ChainPair`
        representative, from the first member edge
    edges : tuple of (int, int)
        member logical edges, sorted
    chi : float
        pairwise susceptibility of the representative at unit
        correlation length

    """

    pattern: ChainPair
    edges: Tuple[Tuple[int, int], ...]
    chi: float

    @property
    def key(self) -> tuple:
        return self.pattern.key

    @property
    def label(self) -> str:
        return self.pattern.label

    def __len__(self) -> int:
        return len(self.edges)

    # /def

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            label=self.label,
            chi=self.chi,
            num_edges=len(self),
            edges=[list(e) for e in self.edges],
        )

    # /def


# /class


# ------------------------------------------------------------------------


def pattern_classes(
    embedding: Embedding, graph: PhysicalGraph
) -> List[PatternClass]:
    """Group the chain pairs joined by couplers into pattern classes.

    Every pair of chains with at least one connecting coupler counts as
    a logical edge.

    Returns
    -------
    classes : list of `PatternClass`
        ordered by increasing ``chi`` (the most weakly connected pattern
        first), ties by label

    """
    inter, _ = coupler_map(embedding, graph)
    groups: Dict[tuple, List[Tuple[int, int]]] = {}
    patterns: Dict[tuple, ChainPair] = {}
    for a, b in sorted(inter):
        pattern = chain_pair(embedding, graph, a, b)
        groups.setdefault(pattern.key, []).append((a, b))
        patterns.setdefault(pattern.key, pattern)

    classes = [
        PatternClass(
            pattern=patterns[key],
            edges=tuple(members),
            chi=chi_pair(embedding, graph, *members[0], xi=1.0),
        )
        for key, members in groups.items()
    ]
    classes.sort(key=lambda c: (c.chi, c.label))
    log.info(
        f"{len(classes)} pattern classes over {len(inter)} connected chain pairs"
    )
    return classes


# /def


def edge_classes(classes: List[PatternClass]) -> Dict[Tuple[int, int], int]:
    """Logical edge -> index of its class in `classes`."""
    return {e: k for k, c in enumerate(classes) for e in c.edges}


# /def


##############################################################################
# END
