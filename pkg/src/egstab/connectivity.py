"""Vertex connectivity up to 3: cut vertices, separating pairs, safe contractions."""

from __future__ import annotations

from itertools import combinations

from .errors import InvariantViolation, PreconditionError, VertexIndexError
from .graph import Graph, bits, contract


def reach(adj, start: int, allowed: int) -> int:
    """Bit-set of vertices reachable from ``start`` inside ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components_mask(g: Graph, allowed: int | None = None) -> list[int]:
    """Connected components of ``G[allowed]`` as bit-sets, ordered by least vertex."""
    allowed = g.full_mask() if allowed is None else allowed
    out = []
    rest = allowed
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = reach(g.adj, v, allowed)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return reach(g.adj, 0, g.full_mask()) == g.full_mask()


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via one iterative DFS (Hopcroft-Tarjan lowpoints)."""
    if not is_connected(g):
        raise PreconditionError("cut_vertices requires a connected graph")
    n = g.n
    if n <= 2:
        return frozenset()
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    clock = 0
    root = 0
    disc[root] = low[root] = clock
    clock += 1
    root_children = 0
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                parent[w] = v
                disc[w] = low[w] = clock
                clock += 1
                if v == root:
                    root_children += 1
                stack.append((w, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        p = parent[v]
        if p != -1:
            low[p] = min(low[p], low[v])
            if p != root and low[v] >= disc[p]:
                cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def is_two_connected(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    full = g.full_mask()
    adj = g.adj
    for nb in adj:
        if nb.bit_count() < 2:
            return False
    if reach(adj, 0, full) != full:
        return False
    for v in range(n):
        rest = full & ~(1 << v)
        start = 1 if v == 0 else 0
        if reach(adj, start, rest) != rest:
            return False
    return True


def separating_pairs(g: Graph) -> list[tuple[int, int, int]]:
    """All ``(x, y, c)`` with ``G - x - y`` split into ``c >= 2`` components."""
    if not is_two_connected(g):
        raise PreconditionError("separating_pairs requires a 2-connected graph")
    full = g.full_mask()
    out = []
    for x, y in combinations(range(g.n), 2):
        rest = full & ~(1 << x) & ~(1 << y)
        if not rest:
            continue
        comps = components_mask(g, rest)
        if len(comps) >= 2:
            out.append((x, y, len(comps)))
    return out


def has_separating_pair(g: Graph) -> bool:
    full = g.full_mask()
    adj = g.adj
    for x, y in combinations(range(g.n), 2):
        rest = full & ~(1 << x) & ~(1 << y)
        if rest:
            start = (rest & -rest).bit_length() - 1
            if reach(adj, start, rest) != rest:
                return True
    return False


def is_three_connected(g: Graph) -> bool:
    if g.n < 4 or not is_two_connected(g):
        return False
    if g.min_degree() < 3:
        return False
    return not has_separating_pair(g)


def contraction_partner(g: Graph, v: int) -> int:
    """Smallest-index neighbour ``w`` of ``v`` such that ``G/vw`` stays 2-connected.

    Such a neighbour always exists for 2-connected graphs on at least four
    vertices; not finding one raises :class:`InvariantViolation`.
    """
    if not 0 <= v < g.n:
        raise VertexIndexError(f"vertex {v} out of range for n={g.n}")
    if g.n < 4:
        raise PreconditionError("contraction_partner needs at least 4 vertices")
    if not is_two_connected(g):
        raise PreconditionError("contraction_partner requires a 2-connected graph")
    w = safe_contraction_partner(g, v)
    if w is None:
        raise InvariantViolation(f"no 2-connectivity-preserving contraction at vertex {v}")
    return w


def safe_contraction_partner(g: Graph, v: int) -> int | None:
    for w in bits(g.adj[v]):
        if is_two_connected(contract(g, (v, w))):
            return w
    return None
