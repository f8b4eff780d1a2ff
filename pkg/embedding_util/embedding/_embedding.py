# -*- coding: utf-8 -*-

"""Chain Embeddings and their Validation.

Routine Listings
----------------
`Embedding`
`ValidationReport`
`validate`
`coupler_map`
`connecting_couplers`
`coupler_count_histogram`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "Embedding",
    "ValidationReport",
    "validate",
    "coupler_map",
    "connecting_couplers",
    "coupler_count_histogram",
]


##############################################################################
# IMPORTS

# GENERAL

import dataclasses
import functools
from collections import Counter
from typing import Any, Dict, List, Tuple

import networkx as nx


# PROJECT-SPECIFIC

from ..topology import PhysicalGraph
from ..utils.exceptions import InputError
from ..utils.io import content_id


##############################################################################
# PARAMETERS

_Edge = Tuple[int, int]


##############################################################################
# CODE
##############################################################################


@dataclasses.dataclass(frozen=True)
class Embedding:
    """Ordered chains of physical qubits, one per logical variable.

    Parameters
    ----------
    chains : sequence of sequences of int
        ``chains[a]`` is the path of qubits representing variable ``a``.
        The order defines within-chain distance.
    kind : str, optional
        the generator that built it ("clique", "biclique", "cubic", "custom")
    params : dict, optional
        generator parameters; not part of equality

    """

    chains: Tuple[Tuple[int, ...], ...]
    kind: str = "custom"
    params: Dict[str, Any] = dataclasses.field(
        default_factory=dict, compare=False, hash=False
    )

    def __post_init__(self):
        chains = tuple(tuple(int(q) for q in c) for c in self.chains)
        object.__setattr__(self, "chains", chains)

    # /def

    def __len__(self) -> int:
        return len(self.chains)

    # /def

    @property
    def n(self) -> int:
        """Number of logical variables."""
        return len(self.chains)

    @property
    def chain_lengths(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.chains)

    @property
    def chain_length(self) -> int:
        """The longest chain length (all equal for generated embeddings)."""
        return max(self.chain_lengths, default=0)

    @functools.cached_property
    def qubits(self) -> Tuple[int, ...]:
        """All chain qubits, sorted."""
        return tuple(sorted({q for c in self.chains for q in c}))

    @functools.cached_property
    def owner(self) -> Dict[int, int]:
        """Qubit -> variable. Later chains win on overlap."""
        return {q: a for a, c in enumerate(self.chains) for q in c}

    @functools.cached_property
    def position(self) -> Dict[int, int]:
        """Qubit -> index within its chain."""
        return {q: i for c in self.chains for i, q in enumerate(c)}

    # /def

    @functools.cached_property
    def id(self) -> str:
        return content_id(dict(chains=self.chains))

    # /def

    def to_dict(self) -> Dict[str, Any]:
        return dict(
            chains=[list(c) for c in self.chains],
            kind=self.kind,
            params=self.params,
            id=self.id,
        )

    # /def

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "Embedding":
        try:
            chains = doc["chains"]
        except KeyError:
            raise InputError("embedding document has no 'chains'")
        return cls(
            chains=chains,
            kind=doc.get("kind", "custom"),
            params=doc.get("params", {}),
        )

    # /def


# /class


# ------------------------------------------------------------------------


@functools.lru_cache(maxsize=16)
def coupler_map(
    embedding: Embedding, graph: PhysicalGraph
) -> Tuple[Dict[_Edge, Tuple[_Edge, ...]], Tuple[_Edge, ...]]:
    """Sort live couplers among chain qubits.

    Returns
    -------
    inter : dict
        ``(a, b) -> ((i, j), ...)`` for a < b, with ``i`` in chain a and
        ``j`` in chain b; couplers sorted
    intra : tuple of (int, int)
        couplers with both ends in the same chain

    """
    owner = embedding.owner
    inter: Dict[_Edge, List[_Edge]] = {}
    intra: List[_Edge] = []
    for i, j in sorted(graph.couplers):
        a, b = owner.get(i), owner.get(j)
        if a is None or b is None:
            continue
        if a == b:
            intra.append((i, j))
        elif a < b:
            inter.setdefault((a, b), []).append((i, j))
        else:
            inter.setdefault((b, a), []).append((j, i))

    return {k: tuple(v) for k, v in inter.items()}, tuple(intra)


# /def


def connecting_couplers(
    embedding: Embedding, graph: PhysicalGraph, a: int, b: int
) -> Tuple[_Edge, ...]:
    """Couplers ``(i, j)`` with ``i`` in chain `a` and ``j`` in chain `b`."""
    inter, _ = coupler_map(embedding, graph)
    if a < b:
        return inter.get((a, b), ())
    return tuple((i, j) for j, i in inter.get((b, a), ()))


# /def


# ------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`.

    Parameters
    ----------
    size_ok : bool
        one chain per logical variable
    live_ok : bool
        every chain qubit is a live qubit
    overlaps : dict
        qubit -> variables sharing it
    disconnected : tuple of int
        variables whose chain's induced subgraph is not connected
    coupler_counts : dict
        logical edge (a, b) -> number of connecting physical couplers
    uncovered : tuple of (int, int)
        nonzero logical couplings with no connecting coupler

    """

    size_ok: bool
    live_ok: bool
    overlaps: Dict[int, Tuple[int, ...]]
    disconnected: Tuple[int, ...]
    coupler_counts: Dict[_Edge, int]
    uncovered: Tuple[_Edge, ...]

    @property
    def disjoint(self) -> bool:
        return not self.overlaps

    @property
    def passed(self) -> bool:
        return (
            self.size_ok
            and self.live_ok
            and self.disjoint
            and not self.disconnected
            and not self.uncovered
        )

    def failures(self) -> List[str]:
        """Human-readable failure list, empty iff passed."""
        out = []
        if not self.size_ok:
            out.append("size: chain count differs from variable count")
        if not self.live_ok:
            out.append("liveness: chain uses dead qubits")
        if self.overlaps:
            out.append(f"disjointness: {len(self.overlaps)} shared qubits")
        if self.disconnected:
            out.append(f"connectedness: chains {list(self.disconnected)}")
        if self.uncovered:
            out.append(f"coverage: logical edges {list(self.uncovered)}")
        return out

    # /def


# /class


def validate(embedding: Embedding, instance, graph: PhysicalGraph) -> ValidationReport:
    """Check an embedding against a logical problem and hardware graph.

    Parameters
    ----------
    embedding : `Embedding`
    instance : `~embedding_util.instances.Instance`
    graph : `~embedding_util.topology.PhysicalGraph`

    Returns
    -------
    report : `ValidationReport`
        ``report.passed`` is True iff chains are disjoint, live and
        connected and every nonzero coupling has a connecting coupler.

    """
    size_ok = len(embedding) == instance.n

    seen: Dict[int, List[int]] = {}
    for a, chain in enumerate(embedding.chains):
        for q in chain:
            seen.setdefault(q, []).append(a)
    overlaps = {q: tuple(v) for q, v in seen.items() if len(v) > 1}
    live_ok = set(seen) <= graph.qubits

    disconnected = []
    for a, chain in enumerate(embedding.chains):
        live = [q for q in chain if q in graph.qubits]
        if not live or len(live) != len(chain):
            disconnected.append(a)
        elif not nx.is_connected(graph.graph.subgraph(live)):
            disconnected.append(a)

    inter, _ = coupler_map(embedding, graph)
    counts: Dict[_Edge, int] = {}
    uncovered = []
    for (a, b), v in instance.couplings.items():
        if v == 0:
            continue
        k = (
            len(inter.get((a, b), ()))
            if a < len(embedding) and b < len(embedding)
            else 0
        )
        counts[(a, b)] = k
        if k == 0:
            uncovered.append((a, b))

    return ValidationReport(
        size_ok=size_ok,
        live_ok=live_ok,
        overlaps=overlaps,
        disconnected=tuple(disconnected),
        coupler_counts=counts,
        uncovered=tuple(uncovered),
    )


# /def


def coupler_count_histogram(report: ValidationReport) -> Counter:
    """How many logical edges have each connecting-coupler count."""
    return Counter(report.coupler_counts.values())


# /def


##############################################################################
# END
