# -*- coding: utf-8 -*-

"""Two-Chain Connection Patterns.

Routine Listings
----------------
`ChainPair`
`chain_pair`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "ChainPair",
    "chain_pair",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import functools
from typing import Tuple

import networkx as nx


# PROJECT-SPECIFIC

from ._embedding import Embedding, connecting_couplers
from ..topology import PhysicalGraph
from ..utils.exceptions import EmbeddingError, InputError


##############################################################################
# CODE
##############################################################################


def _path_bonds(length: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((k, k + 1) for k in range(length - 1))


# /def


@dataclasses.dataclass(frozen=True)
class ChainPair:
    """Two chains and the couplers joining them, in chain positions.

    Parameters
    ----------
    len_a, len_b : int
        chain lengths
    links : tuple of (int, int)
        connecting couplers as ``(position in a, position in b)``
    bonds_a, bonds_b : tuple of (int, int), optional
        couplers inside each chain, as position pairs; a path by default

    Examples
    --------
    >>> pair = ChainPair(3, 3, ((2, 0),))
    >>> pair.key
    (3, 3, ((0, 0),))

    """

    len_a: int
    len_b: int
    links: Tuple[Tuple[int, int], ...]
    bonds_a: Tuple[Tuple[int, int], ...] = None
    bonds_b: Tuple[Tuple[int, int], ...] = None

    def __post_init__(self):
        if self.len_a < 1 or self.len_b < 1:
            raise InputError("chains must hold at least one qubit")
        links = tuple(sorted((int(i), int(j)) for i, j in self.links))
        if not links:
            raise InputError("a chain pair needs at least one link")
        if any(
            not (0 <= i < self.len_a and 0 <= j < self.len_b) for i, j in links
        ):
            raise InputError(f"link positions out of range: {links}")
        object.__setattr__(self, "links", links)
        for name, length in (("bonds_a", self.len_a), ("bonds_b", self.len_b)):
            bonds = getattr(self, name)
            bonds = _path_bonds(length) if bonds is None else bonds
            object.__setattr__(
                self, name, tuple(sorted(tuple(sorted(b)) for b in bonds))
            )

    # /def

    @property
    def num_qubits(self) -> int:
        return self.len_a + self.len_b

    # /def

    @property
    def is_path(self) -> bool:
        """Whether both chains are simple paths in stored order."""
        return (
            self.bonds_a == _path_bonds(self.len_a)
            and self.bonds_b == _path_bonds(self.len_b)
        )

    # /def

    @functools.cached_property
    def key(self) -> Tuple[int, int, Tuple[Tuple[int, int], ...]]:
        """Canonical form under reversal of either chain and chain swap."""
        candidates = []
        for rev_a in (False, True):
            for rev_b in (False, True):
                links = [
                    (
                        self.len_a - 1 - i if rev_a else i,
                        self.len_b - 1 - j if rev_b else j,
                    )
                    for i, j in self.links
                ]
                candidates.append((self.len_a, self.len_b, tuple(sorted(links))))
                candidates.append(
                    (
                        self.len_b,
                        self.len_a,
                        tuple(sorted((j, i) for i, j in links)),
                    )
                )
        return min(candidates)

    # /def

    @property
    def label(self) -> str:
        """Readable id of the canonical key, e.g. ``'3x3:0-0'``."""
        la, lb, links = self.key
        return f"{la}x{lb}:" + ",".join(f"{i}-{j}" for i, j in links)

    # /def

    def graph(self) -> nx.Graph:
        """The two-chain system; chain `a` on nodes ``0 .. len_a - 1``."""
        g = nx.Graph()
        g.add_nodes_from(range(self.num_qubits))
        g.add_edges_from(self.bonds_a, kind="chain")
        g.add_edges_from(
            ((i + self.len_a, j + self.len_a) for i, j in self.bonds_b),
            kind="chain",
        )
        g.add_edges_from(
            ((i, j + self.len_a) for i, j in self.links), kind="link"
        )
        return g

    # /def


# /class


# ------------------------------------------------------------------------


def chain_pair(
    embedding: Embedding, graph: PhysicalGraph, a: int, b: int
) -> ChainPair:
    """The connection pattern of chains `a` and `b`.

    Raises
    ------
    EmbeddingError
        the chains share no coupler

    """
    links = connecting_couplers(embedding, graph, a, b)
    if not links:
        raise EmbeddingError(f"chains {a} and {b} share no coupler")
    pos = embedding.position
    bonds = []
    for chain in (embedding.chains[a], embedding.chains[b]):
        members = set(chain)
        bonds.append(
            tuple(
                (pos[i], pos[j])
                for i, j in graph.graph.subgraph(members).edges
            )
        )
    return ChainPair(
        len(embedding.chains[a]),
        len(embedding.chains[b]),
        tuple((pos[i], pos[j]) for i, j in links),
        bonds_a=bonds[0],
        bonds_b=bonds[1],
    )


# /def


##############################################################################
# END
