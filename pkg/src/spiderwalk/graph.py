"""Truncated spidernets with a deterministic, rotationally symmetric wiring.

A spidernet S(a, b, c) is a graph grown in strata around a root vertex o.
The root has degree a and every other vertex has degree b, split into
exactly c edges pointing away from the root, one edge pointing back, and
b - c - 1 edges inside the vertex's own stratum.  Stratum j therefore
holds ``a * c**(j-1)`` vertices for j >= 1.

Instances built here are truncated at a finite radius R and wired
canonically:

* vertex (j+1, i) attaches to parent (j, i // c),
* the b - c - 1 intra-stratum edges form a circulant cycle pattern,
  offsets ±1 .. ±(b-c-1)//2 plus the antipodal offset when b - c - 1
  is odd (which then requires every stratum size to be even).

This wiring is invariant under rotating stratum 1 by one position and
propagating that rotation through the parent map, so every instance is
rotationally symmetric around the root.

Vertices are numbered stratum by stratum; each vertex's neighbours are
listed in ascending order (backward, intra, forward), which also makes
the global half-edge order the lexicographic order on (source, target).
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryVertexError,
    InvalidParamsError,
    UnrealizableWiringError,
)

__all__ = [
    "SpidernetParams",
    "Spidernet",
    "build_spidernet",
    "omega",
    "rotation_permutation",
    "half_edge_permutation",
    "write_edge_list",
    "edge_list_text",
    "DEFAULT_MAX_HALF_EDGES",
]

#: Refuse to build graphs with more half-edges than this (overridable).
DEFAULT_MAX_HALF_EDGES = 1 << 27


@dataclass(frozen=True)
class SpidernetParams:
    """Degree data (a, b, c) of a spidernet S(a, b, c).

    Constraints: a >= 1, b >= 2, 1 <= c <= b - 1.  The spidernet is a
    tree exactly when c = b - 1 (no intra-stratum edges).
    """

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if not (isinstance(a, int) and isinstance(b, int) and isinstance(c, int)):
            raise InvalidParamsError("spidernet parameters must be integers")
        if a < 1:
            raise InvalidParamsError(f"root degree a must be >= 1, got {a}")
        if b < 2:
            raise InvalidParamsError(f"vertex degree b must be >= 2, got {b}")
        if not 1 <= c <= b - 1:
            raise InvalidParamsError(f"forward degree c must satisfy 1 <= c <= b-1, got c={c}, b={b}")

    @property
    def intra_degree(self) -> int:
        """Number of same-stratum neighbours of a non-root vertex, b - c - 1."""
        return self.b - self.c - 1

    @property
    def is_tree(self) -> bool:
        return self.c == self.b - 1


class Spidernet:
    """A truncated spidernet: stratified vertex set, CSR adjacency, half-edge index.

    Do not construct directly; use :func:`build_spidernet`.  All arrays are
    read-only views on the canonical wiring:

    ``adj_ptr``/``adj``
        CSR adjacency; the neighbours of vertex ``u`` are
        ``adj[adj_ptr[u]:adj_ptr[u+1]]``, sorted ascending.
    ``he_src``/``he_dst``
        Endpoint vertices of each half-edge (ordered pair).  Half-edge k is
        the k-th pair in lexicographic (src, dst) order.
    ``reversal``
        Permutation with ``(he_src[reversal[k]], he_dst[reversal[k]]) ==
        (he_dst[k], he_src[k])``; an involution.
    """

    def __init__(self, params, radius, sizes, offsets, degrees, adj_ptr, adj):
        self.params: SpidernetParams = params
        self.radius: int = radius
        self.stratum_sizes = sizes            # sizes[j] = |V_j|
        self.stratum_offsets = offsets        # offsets[j] = first vid of V_j
        self.degrees = degrees
        self.adj_ptr = adj_ptr
        self.adj = adj
        self.num_vertices = int(offsets[-1])
        self.num_half_edges = int(adj_ptr[-1])
        self.vertex_stratum = np.repeat(np.arange(radius + 1), sizes)
        self.he_src = np.repeat(np.arange(self.num_vertices), degrees)
        self.he_dst = adj
        # Per-vertex neighbour lists are ascending and strata are laid out
        # consecutively, so the half-edge order is lexicographic in
        # (src, dst); sorting by (dst, src) is then exactly the reversal map.
        self.reversal = np.lexsort((self.he_src, self.he_dst))

    # -- vertex addressing -------------------------------------------------

    def vertex_id(self, j: int, i: int) -> int:
        """Global id of the i-th vertex of stratum j."""
        if not 0 <= j <= self.radius:
            raise InvalidParamsError(f"stratum {j} outside [0, {self.radius}]")
        if not 0 <= i < self.stratum_sizes[j]:
            raise InvalidParamsError(f"index {i} outside stratum of size {self.stratum_sizes[j]}")
        return int(self.stratum_offsets[j] + i)

    def vertex_address(self, vid: int) -> tuple[int, int]:
        """Inverse of :meth:`vertex_id`: global id -> (stratum, index)."""
        j = int(self.vertex_stratum[vid])
        return j, int(vid - self.stratum_offsets[j])

    def neighbors(self, vid: int) -> np.ndarray:
        return self.adj[self.adj_ptr[vid]:self.adj_ptr[vid + 1]]

    def stratum_vertices(self, j: int) -> np.ndarray:
        lo = self.stratum_offsets[j]
        return np.arange(lo, lo + self.stratum_sizes[j])

    def half_edge_index(self, u: int, v: int) -> int:
        """Dense index of the half-edge (u, v)."""
        block = self.neighbors(u)
        pos = int(np.searchsorted(block, v))
        if pos >= len(block) or block[pos] != v:
            raise InvalidParamsError(f"({u}, {v}) is not an edge")
        return int(self.adj_ptr[u] + pos)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        p = self.params
        return (f"Spidernet(a={p.a}, b={p.b}, c={p.c}, radius={self.radius}, "
                f"vertices={self.num_vertices}, half_edges={self.num_half_edges})")


def _wiring_checks(params: SpidernetParams, sizes: np.ndarray) -> None:
    m = params.intra_degree
    if m == 0:
        return
    if params.a <= m:
        raise UnrealizableWiringError(
            f"stratum of size {params.a} cannot host {m} distinct circulant "
            f"offsets; need a > b - c - 1")
    if m % 2 == 1:
        odd = [j for j in range(1, len(sizes)) if sizes[j] % 2 == 1]
        if odd:
            raise UnrealizableWiringError(
                f"odd intra-stratum degree {m} needs even strata, but "
                f"|V_{odd[0]}| = {sizes[odd[0]]} is odd (no 1-factor exists)")


def build_spidernet(params: SpidernetParams, radius: int,
                    max_half_edges: int = DEFAULT_MAX_HALF_EDGES) -> Spidernet:
    """Build the canonical truncation of S(a, b, c) to strata 0..radius.

    Parameters
    ----------
    params:
        Degree data of the spidernet.
    radius:
        Number of strata to keep beyond the root.  Vertices in the last
        stratum are boundary vertices: they keep their backward and
        intra-stratum edges but have no forward edges.
    max_half_edges:
        Memory guard; building refuses graphs with more half-edges.

    Raises
    ------
    InvalidParamsError
        On a malformed radius or when the graph would exceed the budget.
    UnrealizableWiringError
        When b - c - 1 is odd while some stratum has odd size, or when a
        stratum is too small to host the circulant offsets.
    """
    if not isinstance(radius, int) or radius < 0:
        raise InvalidParamsError(f"radius must be a non-negative integer, got {radius}")
    a, b, c = params.a, params.b, params.c
    m = params.intra_degree

    sizes = np.array([1] + [a * c ** (j - 1) for j in range(1, radius + 1)], dtype=np.int64)
    _wiring_checks(params, sizes)

    degrees = np.empty(int(sizes.sum()), dtype=np.int64)
    degrees[0] = a if radius >= 1 else 0
    offsets = np.concatenate(([0], np.cumsum(sizes)))
    for j in range(1, radius + 1):
        deg_j = b if j < radius else 1 + m
        degrees[offsets[j]:offsets[j + 1]] = deg_j
    total = int(degrees.sum())
    if total > max_half_edges:
        raise InvalidParamsError(
            f"radius {radius} needs {total} half-edges, over the budget of {max_half_edges}")

    adj_ptr = np.concatenate(([0], np.cumsum(degrees)))
    adj = np.empty(total, dtype=np.int64)

    if radius >= 1:
        adj[adj_ptr[0]:adj_ptr[1]] = offsets[1] + np.arange(a)

    half = m // 2
    intra_offs = list(range(1, half + 1))
    for j in range(1, radius + 1):
        s = int(sizes[j])
        ids = np.arange(s)
        cols = []
        if j == 1:
            cols.append(np.zeros((s, 1), dtype=np.int64))
        else:
            cols.append((offsets[j - 1] + ids // c)[:, None])
        if m > 0:
            offs = np.array(intra_offs + [s - k for k in intra_offs]
                            + ([s // 2] if m % 2 == 1 else []), dtype=np.int64)
            intra = np.sort((ids[:, None] + offs[None, :]) % s, axis=1)
            cols.append(offsets[j] + intra)
        if j < radius:
            cols.append(offsets[j + 1] + (c * ids[:, None] + np.arange(c)[None, :]))
        block = np.concatenate(cols, axis=1)
        adj[adj_ptr[offsets[j]]:adj_ptr[offsets[j + 1]]] = block.ravel()

    return Spidernet(params, radius, sizes, offsets, degrees, adj_ptr, adj)


def omega(g: Spidernet, u: int, direction: str) -> int:
    """Count the neighbours of u in the given direction.

    ``direction`` is "+" (next stratum), "-" (previous stratum) or "o"
    (same stratum).  Boundary vertices (last stratum) are refused since
    their forward edges were cut by the truncation.
    """
    if direction not in ("+", "-", "o"):
        raise InvalidParamsError(f"direction must be '+', '-' or 'o', got {direction!r}")
    j = int(g.vertex_stratum[u])
    if j == g.radius:
        raise BoundaryVertexError(f"vertex {u} lies on the truncation boundary")
    nbr_strata = g.vertex_stratum[g.neighbors(u)]
    want = {"+": j + 1, "-": j - 1, "o": j}[direction]
    return int(np.count_nonzero(nbr_strata == want))


def rotation_permutation(g: Spidernet) -> np.ndarray:
    """Vertex permutation rotating stratum 1 by one step, lifted outward.

    Rotating stratum 1 by +1 and pushing the rotation through the parent
    map shifts stratum j by c**(j-1).  The result is a graph automorphism
    fixing the root; applied repeatedly it generates the rotational
    symmetry of the canonical wiring.
    """
    perm = np.empty(g.num_vertices, dtype=np.int64)
    perm[0] = 0
    c = g.params.c
    for j in range(1, g.radius + 1):
        s = int(g.stratum_sizes[j])
        lo = int(g.stratum_offsets[j])
        shift = c ** (j - 1)
        perm[lo:lo + s] = lo + (np.arange(s) + shift) % s
    return perm


def half_edge_permutation(g: Spidernet, vertex_perm: np.ndarray) -> np.ndarray:
    """Lift a vertex permutation to half-edges: (u, v) -> (perm[u], perm[v]).

    The vertex permutation must be a graph automorphism; otherwise some
    image pair is not an edge and this raises.
    """
    # Half-edges are stored in lexicographic (src, dst) order, so a single
    # searchsorted on the composite key locates every image pair at once.
    nv = np.int64(g.num_vertices)
    keys = g.he_src * nv + g.he_dst
    new_keys = vertex_perm[g.he_src] * nv + vertex_perm[g.he_dst]
    out = np.searchsorted(keys, new_keys)
    if np.any(out >= g.num_half_edges) or np.any(keys[out] != new_keys):
        raise InvalidParamsError("vertex permutation is not an automorphism")
    return out


def write_edge_list(g: Spidernet, fp) -> None:
    """Write each undirected edge once as a '<j>:<i> <j'>:<i'>' line.

    ``fp`` is a writable text file object.  Pairs appear in lexicographic
    half-edge order restricted to src < dst.
    """
    mask = g.he_src < g.he_dst
    strata_s = g.vertex_stratum[g.he_src[mask]]
    strata_d = g.vertex_stratum[g.he_dst[mask]]
    idx_s = g.he_src[mask] - g.stratum_offsets[strata_s]
    idx_d = g.he_dst[mask] - g.stratum_offsets[strata_d]
    for js, is_, jd, id_ in zip(strata_s, idx_s, strata_d, idx_d):
        fp.write(f"{js}:{is_} {jd}:{id_}\n")


def edge_list_text(g: Spidernet) -> str:
    """Edge list of :func:`write_edge_list` as a string."""
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()
