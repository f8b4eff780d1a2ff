# -*- coding: utf-8 -*-

"""Native Chain Embeddings on Chimera.

All embeddings are placed in the top-left corner of the grid and are
deterministic in their arguments. Defects inside the used region are an
error: the embedders never search around them.

Routine Listings
----------------
`embed_clique`
`embed_biclique`
`embed_cubic`
`clique_corner_sequence`

"""

__author__ = "Nathaniel Starkman"

__all__ = [
    "embed_clique",
    "embed_biclique",
    "embed_cubic",
    "clique_corner_sequence",
]


##############################################################################
# IMPORTS

# GENERAL

import math
from typing import List, Sequence, Tuple

from astropy import log


# PROJECT-SPECIFIC

from ._embedding import Embedding
from ..instances import cubic_site
from ..topology import HORIZONTAL, VERTICAL, PhysicalGraph
from ..utils.exceptions import EmbeddingError, InputError


##############################################################################
# PARAMETERS

# ell index whose corner is flipped relative to the plain triangle
_KINK = 3

# z-slot order inside a cubic block: (shape, index)
_CUBIC_SLOTS = (
    ("A", 0),
    ("A", 1),
    ("B", 0),
    ("B", 1),
    ("A", 2),
    ("A", 3),
    ("B", 2),
    ("B", 3),
)


##############################################################################
# CODE
##############################################################################


def _require_region(graph: PhysicalGraph, chains: Sequence[Sequence[int]], what: str):
    """Raise `EmbeddingError` if the used region holds defects."""
    used = {q for c in chains for q in c}
    dead = sorted(used & graph.defect_qubits)
    cut = sorted(
        c for c in graph.defect_couplers if c[0] in used and c[1] in used
    )
    if dead or cut:
        raise EmbeddingError(
            f"{what}: target region is not defect-free "
            f"(dead qubits {dead[:8]}, dead couplers {cut[:8]}"
            f"{', ...' if len(dead) > 8 or len(cut) > 8 else ''})"
        )


# /def


# ------------------------------------------------------------------------


def clique_corner_sequence(k: int) -> List[Tuple[str, str]]:
    """Ell placement for a k-group native clique.

    Ell ``g`` sheds one column of the working rectangle (``"left"`` or
    ``"right"``) and, for ``g > 0``, grows it by one row (``"top"`` or
    ``"bottom"``). The plain triangle always sheds left and grows at the
    bottom; ell 3 is flipped to shed right and grow on top.

    Examples
    --------
    >>> clique_corner_sequence(5)[3]
    ('right', 'top')

    """
    return [
        ("right", "top") if g == _KINK else ("left", "bottom")
        for g in range(k)
    ]


# /def


def embed_clique(n: int, graph: PhysicalGraph) -> Embedding:
    """Native clique embedding with chains of length ceil(n/4) + 1.

    Variables are grouped four at a time; group ``g`` owns one L-shaped
    path per index: a run of vertical qubits in one cell column ending at
    a corner cell, then a run of horizontal qubits along the corner's row.
    Every pair of groups meets in exactly one cell, and the four chains
    of a group meet twice in their corner cell.

    Parameters
    ----------
    n : int
        clique size, 1 <= n <= 4 m
    graph : `~embedding_util.topology.PhysicalGraph`

    Returns
    -------
    embedding : `Embedding`

    Raises
    ------
    InputError
        n out of range
    EmbeddingError
        defects in the k x k corner block, ``k = ceil(n/4)``

    Examples
    --------
    >>> from embedding_util.topology import build_chimera
    >>> emb = embed_clique(32, build_chimera(8))
    >>> len(emb), set(emb.chain_lengths)
    (32, {9})

    """
    if int(n) != n or n < 1:
        raise InputError(f"clique size must be a positive integer, not {n}")
    n = int(n)
    k = math.ceil(n / 4)
    if k > graph.m:
        raise InputError(f"clique of {n} needs C{k}, graph is C{graph.m}")

    # row coordinates relative to the first ell's row; columns absolute
    top = bottom = 0
    left, right = 0, k - 1
    layout = []  # (corner row, corner col, vertical rows, horizontal cols)
    for g, (shed, grow) in enumerate(clique_corner_sequence(k)):
        if g > 0:
            if grow == "bottom":
                bottom += 1
                row = bottom
            else:
                top -= 1
                row = top
        else:
            row = 0

        if row == bottom:
            rows = list(range(top, bottom + 1))
        else:
            rows = list(range(bottom, top - 1, -1))

        if shed == "left":
            col = left
            cols = list(range(left, right + 1))
            left += 1
        else:
            col = right
            cols = list(range(right, left - 1, -1))
            right -= 1

        layout.append((row, col, rows, cols))

    chains = []
    for v in range(n):
        g, t = divmod(v, 4)
        row, col, rows, cols = layout[g]
        chain = [graph.qubit(r - top, col, VERTICAL, t) for r in rows]
        chain += [graph.qubit(row - top, c, HORIZONTAL, t) for c in cols]
        chains.append(chain)

    _require_region(graph, chains, f"clique({n}) on C{graph.m}")
    log.debug(f"clique({n}) embedded on C{graph.m}, chain length {k + 1}")

    return Embedding(chains, kind="clique", params=dict(n=n, m=graph.m))


# /def


# ------------------------------------------------------------------------


def embed_biclique(n: int, graph: PhysicalGraph) -> Embedding:
    """Native biclique embedding with chains of length ceil(n/8).

    Variables ``0 .. n/2 - 1`` are horizontal chains along cell rows,
    variables ``n/2 .. n - 1`` vertical chains along cell columns. Each
    horizontal chain crosses each vertical chain in exactly one cell.

    Parameters
    ----------
    n : int
        even, 2 <= n <= 8 m
    graph : `~embedding_util.topology.PhysicalGraph`

    Examples
    --------
    >>> from embedding_util.topology import build_chimera
    >>> set(embed_biclique(16, build_chimera(2)).chain_lengths)
    {2}

    """
    if int(n) != n or n < 2 or n % 2:
        raise InputError(f"biclique size must be even and >= 2, not {n}")
    n = int(n)
    half = n // 2
    width = math.ceil(n / 8)
    if width > graph.m:
        raise InputError(f"biclique of {n} needs C{width}, graph is C{graph.m}")

    chains = []
    for v in range(half):
        r, t = divmod(v, 4)
        chains.append(
            [graph.qubit(r, c, HORIZONTAL, t) for c in range(width)]
        )
    for v in range(half):
        c, t = divmod(v, 4)
        chains.append([graph.qubit(r, c, VERTICAL, t) for r in range(width)])

    _require_region(graph, chains, f"biclique({n}) on C{graph.m}")

    return Embedding(chains, kind="biclique", params=dict(n=n, m=graph.m))


# /def


# ------------------------------------------------------------------------


def _cubic_chain(graph: PhysicalGraph, row: int, col: int, shape: str, t: int):
    """4-qubit path of one z-slot in the 2x2 block at (row, col)."""
    q = graph.qubit
    if shape == "A":
        return [
            q(row, col, HORIZONTAL, t),
            q(row, col + 1, HORIZONTAL, t),
            q(row, col + 1, VERTICAL, t),
            q(row + 1, col + 1, VERTICAL, t),
        ]
    return [
        q(row, col, VERTICAL, t),
        q(row + 1, col, VERTICAL, t),
        q(row + 1, col, HORIZONTAL, t),
        q(row + 1, col + 1, HORIZONTAL, t),
    ]


# /def


def embed_cubic(dims: Tuple[int, int, int], graph: PhysicalGraph) -> Embedding:
    """Cubic-lattice embedding with 4-qubit chains.

    Lattice column (x, y) occupies the 2 x 2 cell block with top-left
    cell (2y, 2x); its up to eight z-sites are 4-qubit paths inside the
    block. x-neighbours couple through horizontal inter-cell links,
    y-neighbours through vertical ones, z-neighbours inside the block.

    Parameters
    ----------
    dims : (Lx, Ly, Lz)
        ``2 Lx <= m``, ``2 Ly <= m``, ``Lz <= 8``
    graph : `~embedding_util.topology.PhysicalGraph`

    Examples
    --------
    >>> from embedding_util.topology import build_chimera
    >>> emb = embed_cubic((4, 4, 4), build_chimera(8))
    >>> len(emb), set(emb.chain_lengths)
    (64, {4})

    """
    dims = tuple(int(d) for d in dims)
    if len(dims) != 3 or min(dims) < 1:
        raise InputError(f"dims must be three positive integers, not {dims}")
    lx, ly, lz = dims
    if 2 * lx > graph.m or 2 * ly > graph.m or lz > len(_CUBIC_SLOTS):
        raise InputError(
            f"lattice {dims} does not fit C{graph.m} "
            f"(needs 2 Lx, 2 Ly <= m and Lz <= {len(_CUBIC_SLOTS)})"
        )

    chains = [None] * (lx * ly * lz)
    for x in range(lx):
        for y in range(ly):
            for z in range(lz):
                shape, t = _CUBIC_SLOTS[z]
                chains[cubic_site(dims, x, y, z)] = _cubic_chain(
                    graph, 2 * y, 2 * x, shape, t
                )

    _require_region(graph, chains, f"cubic{dims} on C{graph.m}")

    return Embedding(chains, kind="cubic", params=dict(dims=list(dims), m=graph.m))


# /def


##############################################################################
# END
