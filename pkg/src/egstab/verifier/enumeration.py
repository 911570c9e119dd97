"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on ``m + 1`` vertices is produced from a parent on ``m`` vertices by
adding one vertex with a chosen neighbourhood ``S``. The child is kept only
if the new vertex lies in the automorphism orbit of the child's canonical
deletion vertex, and ``S`` is the least set in its orbit under the parent's
automorphism group. Together these yield every isomorphism class exactly
once, provided the pruning predicates are hereditary (closed under taking
induced subgraphs). Canonical labels and automorphism groups come from nauty
through ``pynauty``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

import pynauty

from ..connectivity import is_connected, is_three_connected, is_two_connected
from ..cycles import has_cycle_at_least
from ..errors import PreconditionError
from ..formats import parse_graph6
from ..graph import Graph, bits

MAX_ENUMERATION_ORDER = 10


@dataclass(frozen=True)
class EnumerationCursor:
    """What to generate.

    ``max_circumference`` keeps graphs with ``c(G) <= max_circumference``;
    it and ``min_edges`` are hereditary and prune every level, the
    connectivity and ``min_degree`` conditions only apply to the output.
    ``shard = (index, count)`` keeps the part of the final level whose
    parent position is ``index`` modulo ``count``. ``source`` replaces the
    generator by a stream of graph6 lines, deduplicated by certificate.
    """

    n: int
    connected: bool = False
    two_connected: bool = False
    three_connected: bool = False
    min_edges: int = 0
    min_degree: int = 0
    max_circumference: int | None = None
    shard: tuple[int, int] = (0, 1)
    source: Iterable[str] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"n must be positive, got {self.n}")
        if self.source is None and self.n > MAX_ENUMERATION_ORDER:
            raise PreconditionError(
                f"built-in enumeration is limited to n <= {MAX_ENUMERATION_ORDER}; "
                f"supply an external graph6 source for n={self.n}")
        index, count = self.shard
        if count < 1 or not 0 <= index < count:
            raise PreconditionError(f"bad shard {index}/{count}")

    @property
    def max_nonedges(self) -> int:
        return comb(self.n, 2) - self.min_edges

    def accepts(self, g: Graph) -> bool:
        """All filters, evaluated directly on ``g``."""
        if g.n != self.n or g.edge_count() < self.min_edges:
            return False
        if self.min_degree and (g.n == 0 or g.min_degree() < self.min_degree):
            return False
        if self.three_connected and not is_three_connected(g):
            return False
        if self.two_connected and not is_two_connected(g):
            return False
        if self.connected and not is_connected(g):
            return False
        if self.max_circumference is not None and has_cycle_at_least(g, self.max_circumference + 1):
            return False
        return True


def _nauty_graph(n: int, adj) -> pynauty.Graph:
    return pynauty.Graph(n, adjacency_dict={v: list(bits(adj[v])) for v in range(n) if adj[v]})


def certificate(g: Graph) -> bytes:
    """nauty certificate: equal exactly for isomorphic graphs of the same order."""
    return g.n.to_bytes(1, "big") + pynauty.certificate(_nauty_graph(g.n, g.adj))


def canonical_form(g: Graph) -> Graph:
    lab = pynauty.canon_label(_nauty_graph(g.n, g.adj))
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return g.relabel(pos)


def _apply(perm, mask: int) -> int:
    out = 0
    for u in bits(mask):
        out |= 1 << perm[u]
    return out


def _least_in_orbit(gens, s: int) -> bool:
    seen = {s}
    todo = [s]
    while todo:
        x = todo.pop()
        for p in gens:
            y = _apply(p, x)
            if y < s:
                return False
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return True


def _is_canonical_child(adj, m: int) -> bool:
    """Is the last vertex ``m`` of the child in its canonical deletion orbit?

    The deletion vertex is the one with the largest (degree, neighbour-degree
    sum) and, among ties, the one nauty places last.
    """
    n = m + 1
    deg = [a.bit_count() for a in adj]
    top = max(deg)
    if deg[m] != top:
        return False
    cands = [u for u in range(n) if deg[u] == top]
    if len(cands) == 1:
        return True
    score = {u: sum(deg[w] for w in bits(adj[u])) for u in cands}
    best = max(score.values())
    if score[m] != best:
        return False
    cands = [u for u in cands if score[u] == best]
    if len(cands) == 1:
        return True
    ng = _nauty_graph(n, adj)
    lab = pynauty.canon_label(ng)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    w = max(cands, key=lambda u: pos[u])
    if w == m:
        return True
    orbits = pynauty.autgrp(ng)[3]
    return orbits[w] == orbits[m]


def _children(parent, m: int, max_nonedges: int, circ_cap: int | None, keep=None):
    """Accepted children of one parent (``parent`` is a tuple of ``m`` rows)."""
    nonedges = comb(m, 2) - sum(a.bit_count() for a in parent) // 2
    spare = max_nonedges - nonedges
    if spare < 0:
        return []
    min_size = max(0, m - spare)
    gens = pynauty.autgrp(_nauty_graph(m, parent))[0] if m > 1 else []
    # drop identity generators nauty may report
    gens = [p for p in gens if any(p[i] != i for i in range(m))]
    out = []
    bit = 1 << m
    for s in range(1 << m):
        if s.bit_count() < min_size:
            continue
        if keep is not None and not keep(s):
            continue
        if gens and not _least_in_orbit(gens, s):
            continue
        adj = [parent[u] | bit if s >> u & 1 else parent[u] for u in range(m)]
        adj.append(s)
        if not _is_canonical_child(adj, m):
            continue
        if circ_cap is not None and m + 1 > circ_cap:
            if has_cycle_at_least(Graph(m + 1, adj, _trusted=True), circ_cap + 1):
                continue
        out.append(tuple(adj))
    return out


_UNBOUNDED = 1 << 30
_LEVEL_CACHE: dict[tuple, list[tuple[int, ...]]] = {}


def level(m: int, max_nonedges: int | None = None, circ_cap: int | None = None) -> list[tuple[int, ...]]:
    """All classes on ``m`` vertices passing the hereditary filters, cached per process."""
    if max_nonedges is None or max_nonedges >= comb(m, 2):
        max_nonedges = _UNBOUNDED
    if circ_cap is not None and circ_cap >= m:
        circ_cap = None
    key = (m, max_nonedges, circ_cap)
    if key in _LEVEL_CACHE:
        return _LEVEL_CACHE[key]
    if m == 1:
        out = [(0,)]
    else:
        out = []
        for p in level(m - 1, max_nonedges, circ_cap):
            out.extend(_children(p, m - 1, max_nonedges, circ_cap))
    _LEVEL_CACHE[key] = out
    return out


def clear_cache() -> None:
    _LEVEL_CACHE.clear()


def _final_keep(cursor: EnumerationCursor, m: int):
    """Cheap set-level test on the new vertex's neighbourhood at the last level."""
    need = max(cursor.min_degree, 2 if (cursor.two_connected or cursor.three_connected) else 0,
               3 if cursor.three_connected else 0, 1 if cursor.connected and m else 0)
    if not need:
        return None
    return lambda s: s.bit_count() >= need


def _generate(cursor: EnumerationCursor) -> Iterator[Graph]:
    n = cursor.n
    circ = cursor.max_circumference
    budget = cursor.max_nonedges
    if n == 1:
        candidates = [(0,)]
    else:
        index, count = cursor.shard
        if count == 1:
            candidates = level(n, budget, circ)
        else:
            parents = level(n - 1, budget, circ)
            cap = circ if circ is not None and circ < n else None
            keep = _final_keep(cursor, n - 1)
            candidates = []
            for pos in range(index, len(parents), count):
                candidates.extend(_children(parents[pos], n - 1, budget, cap, keep))
    index, count = cursor.shard
    if n == 1 and index != 0:
        return
    for adj in candidates:
        g = Graph(n, adj, _trusted=True)
        if _passes_output_filters(cursor, g):
            yield g


def _passes_output_filters(cursor: EnumerationCursor, g: Graph) -> bool:
    # hereditary filters already hold; check the rest, cheapest first
    if cursor.min_degree and g.min_degree() < cursor.min_degree:
        return False
    if cursor.three_connected:
        return is_three_connected(g)
    if cursor.two_connected:
        return is_two_connected(g)
    if cursor.connected:
        return is_connected(g)
    return True


def _external(cursor: EnumerationCursor) -> Iterator[Graph]:
    seen: set[bytes] = set()
    index, count = cursor.shard
    pos = 0
    for lineno, line in enumerate(cursor.source, 1):
        line = line.strip()
        if not line or line == ">>graph6<<":
            continue
        g = parse_graph6(line, lineno)
        cert = certificate(g)
        if cert in seen:
            continue
        seen.add(cert)
        mine = pos % count == index
        pos += 1
        if mine and cursor.accepts(g):
            yield g


def enumerate_graphs(cursor: EnumerationCursor) -> Iterator[Graph]:
    """One representative per isomorphism class that passes the cursor's filters."""
    if cursor.source is not None:
        return _external(cursor)
    return _generate(cursor)
