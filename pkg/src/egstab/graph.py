"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit-set per vertex, so neighbourhood
intersections (triangle counts, common neighbours) are single ``&`` operations.
Every operation returns a fresh :class:`Graph`; nothing mutates in place.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .errors import EdgeNotFoundError, PreconditionError, VertexIndexError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class EdgeId(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, u: int, v: int) -> "EdgeId":
        if u == v:
            raise PreconditionError(f"loop ({u}, {v}) is not an edge of a simple graph")
        return cls(u, v) if u < v else cls(v, u)


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bit-set of ``v``. Construction validates
    symmetry, irreflexivity and that no bit at or above ``n`` is set.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int] = (), *, _trusted: bool = False):
        adj = tuple(adj) if adj != () else (0,) * n
        if not _trusted:
            if not 0 <= n <= MAX_VERTICES:
                raise PreconditionError(f"vertex count {n} outside 0..{MAX_VERTICES}")
            if len(adj) != n:
                raise PreconditionError(f"expected {n} adjacency sets, got {len(adj)}")
            full = (1 << n) - 1
            for v, nb in enumerate(adj):
                if nb & ~full:
                    raise PreconditionError(f"vertex {v} has a neighbour index >= n")
                if nb >> v & 1:
                    raise PreconditionError(f"vertex {v} is adjacent to itself")
                for w in bits(nb):
                    if not adj[w] >> v & 1:
                        raise PreconditionError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.adj = adj
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise PreconditionError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, _trusted=True)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise PreconditionError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_bipartite(cls, p: int, q: int) -> "Graph":
        return cls.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- basic queries --------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        return min((nb.bit_count() for nb in self.adj), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> Iterator[EdgeId]:
        """Edges in lexicographic ``(u, v)`` order with ``u < v``."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield EdgeId(u, u + 1 + v)

    def non_edges(self) -> Iterator[EdgeId]:
        for u, v in combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield EdgeId(u, v)

    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs ------------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            self._check_vertex(u)
            self._check_vertex(v)
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, adj, _trusted=True)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise EdgeNotFoundError(f"({u}, {v}) is not an edge")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, adj, _trusted=True)

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for w in bits(self.adj[v]):
                adj[pv] |= 1 << perm[w]
        return Graph(self.n, adj, _trusted=True)

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(self.n, [full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)], _trusted=True)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexIndexError(f"vertex {v} out of range for n={self.n}")

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count()})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))


def _rebuild(n, adj):
    return Graph(n, adj, _trusted=True)


class DegreeProfile(tuple):
    """Nondecreasing degree sequence ``d_1 <= ... <= d_n`` (stored 0-based)."""

    def __new__(cls, graph: Graph):
        return super().__new__(cls, sorted(graph.degrees()))

    def d(self, i: int) -> int:
        """1-based access matching the usual ``d_i`` notation."""
        if not 1 <= i <= len(self):
            raise PreconditionError(f"degree index {i} outside 1..{len(self)}")
        return self[i - 1]


def edge_count(g: Graph) -> int:
    return g.edge_count()


def vertices_of_degree_at_most(g: Graph, s: int) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.adj[v].bit_count() <= s)


def _require_edge(g: Graph, e: tuple[int, int]) -> EdgeId:
    u, v = e
    if not g.has_edge(u, v):
        raise EdgeNotFoundError(f"({u}, {v}) is not an edge of {g!r}")
    return EdgeId.of(u, v)


def contract(g: Graph, e: tuple[int, int]) -> Graph:
    """Contract edge ``uv`` into a single vertex, merging parallel edges.

    With ``u < v`` the merged vertex keeps index ``u``; the last vertex
    ``n-1`` moves into slot ``v`` (nothing moves when ``v == n-1``).
    """
    u, v = _require_edge(g, e)
    n = g.n
    last = n - 1
    target = list(range(n))
    target[v] = u
    if v != last:
        target[last] = v

    adj = [0] * (n - 1)
    for w in range(n):
        tw = target[w]
        row = 0
        for x in bits(g.adj[w]):
            row |= 1 << target[x]
        adj[tw] |= row
    for w in range(n - 1):
        adj[w] &= ~(1 << w)
    return Graph(n - 1, adj, _trusted=True)


def triangle_count_edge(g: Graph, e: tuple[int, int]) -> int:
    u, v = _require_edge(g, e)
    return (g.adj[u] & g.adj[v]).bit_count()


def min_edge_triangle(g: Graph) -> int:
    best = None
    for u, v in g.edges():
        t = (g.adj[u] & g.adj[v]).bit_count()
        if best is None or t < best:
            best = t
            if t == 0:
                break
    if best is None:
        raise PreconditionError("minimum edge-triangle count of an edgeless graph is undefined")
    return best


def _check_vertex_set(g: Graph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise VertexIndexError(f"vertex {v} out of range for n={g.n}")
        m |= 1 << v
    return m


def induced_subgraph_mask(g: Graph, keep: int) -> Graph:
    kept = list(bits(keep))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        row = 0
        for w in bits(g.adj[v] & keep):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(kept), adj, _trusted=True)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[S]``; surviving vertices keep their relative order."""
    return induced_subgraph_mask(g, _check_vertex_set(g, s))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """``G - S``; surviving vertices keep their relative order."""
    m = _check_vertex_set(g, s)
    if m.bit_count() >= g.n and g.n > 0:
        raise PreconditionError("cannot delete every vertex")
    return induced_subgraph_mask(g, g.full_mask() & ~m)


def disjoint_union(*graphs: Graph) -> Graph:
    adj = []
    offset = 0
    for h in graphs:
        adj.extend(nb << offset for nb in h.adj)
        offset += h.n
    return Graph(offset, adj)
