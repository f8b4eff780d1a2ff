# -*- coding: utf-8 -*-

"""Chimera hardware graphs.

Qubit ids follow the linear Chimera convention::

    id = ((row * m + col) * 2 + shore) * 4 + index

with ``shore`` 0 for vertical qubits (coupled to the same index in the
cells above and below) and 1 for horizontal qubits (coupled to the same
index in the cells left and right). Within a cell every vertical qubit is
coupled to every horizontal qubit.

Routine Listings
----------------
`PhysicalGraph`
`build_chimera`
`subgraph_distance`
`chimera_id`
`chimera_coordinate`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "VERTICAL",
    "HORIZONTAL",
    "PhysicalGraph",
    "build_chimera",
    "subgraph_distance",
    "chimera_id",
    "chimera_coordinate",
]


##############################################################################
# IMPORTS

# GENERAL

import functools
from typing import Any, Dict, FrozenSet, Iterable, Tuple, Union

import networkx as nx
import dwave_networkx as dnx


# PROJECT-SPECIFIC

from ..utils.exceptions import InputError


##############################################################################
# PARAMETERS

VERTICAL = 0
HORIZONTAL = 1

_Coupler = Tuple[int, int]


##############################################################################
# CODE
##############################################################################


def chimera_id(m: int, row: int, col: int, shore: int, index: int) -> int:
    """Linear qubit id of a Chimera coordinate.

    Examples
    --------
    >>> chimera_id(2, 1, 0, 1, 3)
    23

    """
    return ((row * m + col) * 2 + shore) * 4 + index


# /def


def chimera_coordinate(m: int, qubit: int) -> Tuple[int, int, int, int]:
    """(row, col, shore, index) of a linear qubit id.

    Examples
    --------
    >>> chimera_coordinate(2, 23)
    (1, 0, 1, 3)

    """
    cell, rest = divmod(qubit, 8)
    shore, index = divmod(rest, 4)
    row, col = divmod(cell, m)
    return row, col, shore, index


# /def


def _coupler(i: int, j: int) -> _Coupler:
    return (i, j) if i < j else (j, i)


# /def


# ------------------------------------------------------------------------


class PhysicalGraph:
    """Chimera C_m graph with defects removed.

    Instances are immutable; build them with :func:`build_chimera`.

    Parameters
    ----------
    m : int
        grid size, m x m cells of 8 qubits
    qubits : frozenset of int
        live qubits
    couplers : frozenset of (int, int)
        live couplers, stored with the smaller id first
    defect_qubits, defect_couplers : frozenset
        the removed qubits and couplers, as given

    """

    __slots__ = (
        "_m",
        "_qubits",
        "_couplers",
        "_defect_qubits",
        "_defect_couplers",
        "_nx",
    )

    def __init__(
        self,
        m: int,
        qubits: FrozenSet[int],
        couplers: FrozenSet[_Coupler],
        defect_qubits: FrozenSet[int] = frozenset(),
        defect_couplers: FrozenSet[_Coupler] = frozenset(),
    ):
        graph = nx.Graph()
        graph.add_nodes_from(sorted(qubits))
        graph.add_edges_from(sorted(couplers))
        nx.freeze(graph)

        object.__setattr__(self, "_m", int(m))
        object.__setattr__(self, "_qubits", frozenset(qubits))
        object.__setattr__(self, "_couplers", frozenset(couplers))
        object.__setattr__(self, "_defect_qubits", frozenset(defect_qubits))
        object.__setattr__(
            self, "_defect_couplers", frozenset(defect_couplers)
        )
        object.__setattr__(self, "_nx", graph)

    # /def

    def __setattr__(self, name, value):
        raise AttributeError("PhysicalGraph is immutable")

    # /def

    @property
    def m(self) -> int:
        """Grid size."""
        return self._m

    @property
    def qubits(self) -> FrozenSet[int]:
        return self._qubits

    @property
    def couplers(self) -> FrozenSet[_Coupler]:
        return self._couplers

    @property
    def defect_qubits(self) -> FrozenSet[int]:
        return self._defect_qubits

    @property
    def defect_couplers(self) -> FrozenSet[_Coupler]:
        return self._defect_couplers

    @property
    def graph(self) -> nx.Graph:
        """Frozen `networkx.Graph` view of the hardware."""
        return self._nx

    # /def

    def has_coupler(self, i: int, j: int) -> bool:
        return self._nx.has_edge(i, j)

    # /def

    def neighbors(self, qubit: int) -> Iterable[int]:
        return self._nx.neighbors(qubit)

    # /def

    def coordinate(self, qubit: int) -> Tuple[int, int, int, int]:
        return chimera_coordinate(self._m, qubit)

    # /def

    def qubit(self, row: int, col: int, shore: int, index: int) -> int:
        return chimera_id(self._m, row, col, shore, index)

    # /def

    # --------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        """JSON-able triple the graph is rebuilt from."""
        return dict(
            m=self._m,
            defect_qubits=sorted(self._defect_qubits),
            defect_couplers=[list(c) for c in sorted(self._defect_couplers)],
        )

    # /def

    @classmethod
    def from_dict(cls, doc: Dict[str, Any]) -> "PhysicalGraph":
        """Rebuild from :meth:`to_dict` output."""
        try:
            m = doc["m"]
        except KeyError:
            raise InputError("graph document has no 'm'")
        return build_chimera(
            m,
            doc.get("defect_qubits", ()),
            [tuple(c) for c in doc.get("defect_couplers", ())],
        )

    # /def

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PhysicalGraph):
            return NotImplemented
        return (
            self._m == other._m
            and self._qubits == other._qubits
            and self._couplers == other._couplers
        )

    # /def

    def __hash__(self) -> int:
        return hash((self._m, self._qubits, self._couplers))

    # /def

    def __repr__(self) -> str:
        return (
            f"<PhysicalGraph C{self._m}: {len(self._qubits)} qubits, "
            f"{len(self._couplers)} couplers>"
        )

    # /def


# /class


# ------------------------------------------------------------------------


@functools.lru_cache(maxsize=32)
def _ideal_chimera(m: int) -> Tuple[FrozenSet[int], FrozenSet[_Coupler]]:
    """Qubits and couplers of the defect-free C_m."""
    ideal = dnx.chimera_graph(m, m, 4)
    qubits = frozenset(ideal.nodes)
    couplers = frozenset(_coupler(i, j) for i, j in ideal.edges)
    return qubits, couplers


# /def


def build_chimera(
    m: int,
    defect_qubits: Iterable[int] = (),
    defect_couplers: Iterable[_Coupler] = (),
) -> PhysicalGraph:
    """Chimera C_m graph with defects removed.

    Parameters
    ----------
    m : int
        grid size, at least 1
    defect_qubits : iterable of int, optional
        qubits to remove, with all their couplers
    defect_couplers : iterable of (int, int), optional
        couplers to remove; each must be an ideal C_m coupler

    Returns
    -------
    graph : `PhysicalGraph`

    Raises
    ------
    InputError
        m < 1 or a defect id outside the ideal graph

    Examples
    --------
    >>> g = build_chimera(2)
    >>> len(g.qubits), len(g.couplers)
    (32, 80)

    """
    if int(m) != m or m < 1:
        raise InputError(f"grid size must be a positive integer, not {m}")
    m = int(m)

    ideal_qubits, ideal_couplers = _ideal_chimera(m)

    dq = frozenset(int(q) for q in defect_qubits)
    bad = sorted(q for q in dq if q not in ideal_qubits)
    if bad:
        raise InputError(f"defect qubits out of range for C{m}: {bad}")

    dc = frozenset(_coupler(int(i), int(j)) for i, j in defect_couplers)
    bad = sorted(c for c in dc if c not in ideal_couplers)
    if bad:
        raise InputError(f"defect couplers are not C{m} couplers: {bad}")

    qubits = ideal_qubits - dq
    couplers = frozenset(
        c
        for c in ideal_couplers - dc
        if c[0] not in dq and c[1] not in dq
    )

    return PhysicalGraph(m, qubits, couplers, dq, dc)


# /def


# ------------------------------------------------------------------------


def subgraph_distance(
    graph: PhysicalGraph, subset: Iterable[int], i: int, j: int
) -> Union[int, float]:
    """Shortest-path length between `i` and `j` inside `subset`.

    Parameters
    ----------
    graph : `PhysicalGraph`
    subset : iterable of int
        live qubits inducing the subgraph
    i, j : int
        endpoints, both in `subset`

    Returns
    -------
    distance : int or float
        ``float("inf")`` if `i` and `j` are disconnected in the subgraph

    Raises
    ------
    InputError
        `i` or `j` not in `subset`, or `subset` has dead qubits

    Examples
    --------
    >>> g = build_chimera(1)
    >>> subgraph_distance(g, {0, 4, 1}, 0, 1)
    2

    """
    subset = frozenset(subset)
    if i not in subset or j not in subset:
        raise InputError(f"qubits {i}, {j} must both be in the subset")
    dead = subset - graph.qubits
    if dead:
        raise InputError(f"subset contains dead qubits {sorted(dead)}")

    try:
        return nx.shortest_path_length(graph.graph.subgraph(subset), i, j)
    except nx.NetworkXNoPath:
        return float("inf")


# /def


##############################################################################
# END
