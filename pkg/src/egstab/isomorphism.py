"""Exact isomorphism test by backtracking.

Deliberately independent of the canonical-labelling routine used for
census deduplication, so the two can cross-check each other.
"""

from __future__ import annotations

from .config import iso_limit
from .errors import SearchLimitError
from .graph import Graph, bits


def _vertex_invariants(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [
        (deg[v], tuple(sorted(deg[w] for w in bits(g.adj[v]))), (g.adj[v] & _two_step(g, v)).bit_count())
        for v in range(g.n)
    ]


def _two_step(g: Graph, v: int) -> int:
    m = 0
    for w in bits(g.adj[v]):
        m |= g.adj[w]
    return m


def are_isomorphic(g: Graph, h: Graph, limit: int | None = None) -> bool:
    limit = iso_limit() if limit is None else limit
    if max(g.n, h.n) > limit:
        raise SearchLimitError(f"isomorphism search limited to {limit} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False

    n = g.n
    # match the most constrained vertices of g first: rare invariant, then high degree
    counts: dict[tuple, int] = {}
    for inv in inv_g:
        counts[inv] = counts.get(inv, 0) + 1
    order = sorted(range(n), key=lambda v: (counts[inv_g[v]], -inv_g[v][0], v))
    candidates = [[w for w in range(n) if inv_h[w] == inv_g[v]] for v in range(n)]

    mapping = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[v]:
            if used >> w & 1:
                continue
            ok = True
            gv = g.adj[v]
            hw = h.adj[w]
            for d in range(depth):
                x = order[d]
                if (gv >> x & 1) != (hw >> mapping[x] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return extend(0)
