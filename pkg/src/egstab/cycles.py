"""Exact longest cycles and paths, plus the degree conditions for hamiltonicity.

All searches are depth-first over simple paths with bit-set bookkeeping and
a reachability bound: a partial path of length ``L`` whose end can still
reach ``R`` unvisited vertices can never beat ``L + R``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .config import exact_limit
from .connectivity import is_two_connected, reach
from .errors import EgstabError, PreconditionError, SearchLimitError, VertexIndexError
from .graph import DegreeProfile, Graph, bits


class BudgetExceeded(EgstabError):
    """A cooperative search budget ran out before the search finished."""


class SearchBudget:
    """Counts DFS nodes; ``cancel()`` or exhaustion aborts the running search."""

    def __init__(self, max_nodes: int | None = None):
        self.max_nodes = max_nodes
        self.nodes = 0
        self.cancelled = False

    def cancel(self):
        self.cancelled = True

    def tick(self):
        self.nodes += 1
        if self.cancelled or (self.max_nodes is not None and self.nodes > self.max_nodes):
            raise BudgetExceeded(f"search aborted after {self.nodes} nodes")


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]

    @property
    def x(self) -> int:
        return self.vertices[0]

    @property
    def y(self) -> int:
        return self.vertices[-1]

    @property
    def order(self) -> int:
        """Number of vertices on the path."""
        return len(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


class _Found(Exception):
    pass


def _check_limit(g: Graph, limit: int | None) -> None:
    limit = exact_limit() if limit is None else limit
    if g.n > limit:
        raise SearchLimitError(f"exact search limited to {limit} vertices, got {g.n}")


def _peel(adj, free: int, ends: int) -> int:
    """Drop free vertices that cannot sit on a path between the ends.

    An interior vertex of the closing path needs two neighbours among the
    free vertices and the two path ends; peel until that holds everywhere.
    """
    alive = free | ends
    while True:
        dead = 0
        for w in bits(alive & free):
            if (adj[w] & alive).bit_count() < 2:
                dead |= 1 << w
        if not dead:
            return alive & free
        alive &= ~dead


def _longest_cycle(g: Graph, stop_at: int | None, budget: SearchBudget | None, floor: int = 0):
    """Longest cycle, or the first one reaching ``stop_at``.

    Only cycles longer than ``floor`` are looked for; ``floor = k-1`` turns
    the search into the decision ``c(G) >= k`` with much stronger pruning.
    """
    adj = g.adj
    n = g.n
    full = g.full_mask()
    best_len = 0
    best: list[int] | None = None
    path: list[int] = []

    for s in range(n):
        bar = max(best_len, floor)
        if n - s <= bar:
            break
        allowed = full & ~((1 << s) - 1)
        # only the part of the graph s can reach matters
        allowed = reach(adj, s, allowed)
        if allowed.bit_count() <= bar or adj[s].bit_count() < 2:
            continue
        sbit = 1 << s

        def dfs(v: int, visited: int, length: int) -> None:
            nonlocal best_len, best
            if budget is not None:
                budget.tick()
            if length > best_len and length >= 3 and adj[v] & sbit:
                best_len = length
                best = path.copy()
                if stop_at is not None and best_len >= stop_at:
                    raise _Found
            free = allowed & ~visited
            cand = adj[v] & free
            if not cand:
                return
            bar = best_len if best_len > floor else floor
            if length + free.bit_count() <= bar:
                return
            live = _peel(adj, free, (1 << v) | sbit)
            cand &= live
            if not cand:
                return
            if length + (reach(adj, v, live | (1 << v)) & live).bit_count() <= bar:
                return
            for w in bits(cand):
                path.append(w)
                dfs(w, visited | (1 << w), length + 1)
                path.pop()

        path[:] = [s]
        try:
            dfs(s, sbit, 1)
        except _Found:
            break
    return best_len, best


def _cycle_table(g: Graph, budget: SearchBudget | None, stop_at: int | None = None):
    """Subset table of path end-points, anchored at each set's least vertex.

    ``table[S]`` is the bit-set of vertices ``v`` such that some path starting
    at ``min(S)`` visits exactly ``S`` and ends at ``v``. A set closes into a
    cycle when one of its ends is adjacent to ``min(S)``. Returns the table,
    the best cycle set found and its size.
    """
    n = g.n
    adj = g.adj
    size = 1 << n
    table = [0] * size
    for s in range(n):
        table[1 << s] = 1 << s
    best_mask = 0
    best_len = 0
    for mask in range(1, size):
        ends = table[mask]
        if not ends:
            continue
        if budget is not None and not mask & 1023:
            budget.tick()
        low = mask & -mask
        s = low.bit_length() - 1
        ext = 0
        for v in bits(ends):
            ext |= adj[v]
        if ends & adj[s]:
            pc = mask.bit_count()
            if pc >= 3 and pc > best_len:
                best_len = pc
                best_mask = mask
                if stop_at is not None and pc >= stop_at:
                    break
        ext &= ~mask & ~((low << 1) - 1)
        while ext:
            u = ext & -ext
            table[mask | u] |= u
            ext ^= u
    return table, best_mask, best_len


def _trace_cycle(g: Graph, table, mask: int) -> list[int]:
    adj = g.adj
    s = (mask & -mask).bit_length() - 1
    end = next(bits(table[mask] & adj[s]))
    path = [end]
    cur = mask
    while cur != 1 << s:
        prev = cur & ~(1 << end)
        end = next(bits(table[prev] & adj[end]))
        path.append(end)
        cur = prev
    path.reverse()
    return path


def circumference(g: Graph, *, limit: int | None = None,
                  budget: SearchBudget | None = None) -> tuple[int, CycleWitness | None]:
    """Length of a longest cycle (0 for forests) with a witness cycle."""
    _check_limit(g, limit)
    if g.n < 3:
        return 0, None
    table, mask, length = _cycle_table(g, budget)
    if not length:
        return 0, None
    return length, CycleWitness(tuple(_trace_cycle(g, table, mask)))


def circumference_dfs(g: Graph, *, limit: int | None = None,
                      budget: SearchBudget | None = None) -> tuple[int, CycleWitness | None]:
    """Same answer as :func:`circumference` by depth-first branch and bound."""
    _check_limit(g, limit)
    length, cyc = _longest_cycle(g, g.n, budget)
    return length, (CycleWitness(tuple(cyc)) if cyc else None)


def has_cycle_at_least(g: Graph, k: int, *, limit: int | None = None,
                       budget: SearchBudget | None = None) -> bool:
    """Decide ``c(G) >= k``, stopping at the first long enough cycle."""
    _check_limit(g, limit)
    if k > g.n:
        return False
    if k <= 0:
        return True
    k = max(k, 3)
    # dense graphs usually give up a long cycle within a few hundred DFS nodes
    try:
        length, _ = _longest_cycle(g, k, SearchBudget(32 * g.n), floor=k - 1)
        if length >= k:
            return True
        return False
    except BudgetExceeded:
        pass
    _, _, length = _cycle_table(g, budget, stop_at=k)
    return length >= k


def is_hamiltonian(g: Graph, *, limit: int | None = None, budget: SearchBudget | None = None) -> bool:
    if g.n < 3 or g.min_degree() < 2:
        return False
    return has_cycle_at_least(g, g.n, limit=limit, budget=budget)


def _longest_path(g: Graph, x: int, y: int, stop_at: int | None, budget: SearchBudget | None):
    adj = g.adj
    full = g.full_mask()
    ybit = 1 << y
    best_edges = -1
    best: list[int] | None = None
    path = [x]

    def dfs(v: int, visited: int, edges: int) -> None:
        nonlocal best_edges, best
        if budget is not None:
            budget.tick()
        free = full & ~visited
        if adj[v] & ybit:
            if edges + 1 > best_edges:
                best_edges = edges + 1
                best = path + [y]
                if stop_at is not None and best_edges >= stop_at:
                    raise _Found
        inner = free & ~ybit
        cand = adj[v] & inner
        if not cand:
            return
        # the path still has to finish at y, so y must stay reachable
        r = reach(adj, v, free | (1 << v))
        if not r & ybit:
            return
        if edges + r.bit_count() - 1 <= best_edges:
            return
        for w in bits(cand):
            path.append(w)
            dfs(w, visited | (1 << w), edges + 1)
            path.pop()

    try:
        dfs(x, 1 << x, 0)
    except _Found:
        pass
    return best_edges, best


def _check_pair(g: Graph, x: int, y: int) -> None:
    for v in (x, y):
        if not 0 <= v < g.n:
            raise VertexIndexError(f"vertex {v} out of range for n={g.n}")
    if x == y:
        raise PreconditionError("longest path endpoints must differ")


def longest_path_between(g: Graph, x: int, y: int, *, limit: int | None = None,
                         budget: SearchBudget | None = None) -> int:
    """Maximum number of edges on an x,y-path; 0 when no such path exists."""
    _check_limit(g, limit)
    _check_pair(g, x, y)
    return max(_longest_path(g, x, y, None, budget)[0], 0)


def longest_path_witness(g: Graph, x: int, y: int, *, limit: int | None = None) -> PathWitness | None:
    _check_limit(g, limit)
    _check_pair(g, x, y)
    _, p = _longest_path(g, x, y, None, None)
    return PathWitness(tuple(p)) if p else None


def has_path_at_least(g: Graph, x: int, y: int, edges: int, *, limit: int | None = None,
                      budget: SearchBudget | None = None) -> bool:
    """Decide whether some x,y-path has at least ``edges`` edges."""
    _check_limit(g, limit)
    _check_pair(g, x, y)
    if edges > g.n - 1:
        return False
    return _longest_path(g, x, y, max(edges, 1), budget)[0] >= edges


def chvatal_index(g: Graph) -> int | None:
    """Smallest ``i < n/2`` with ``d_i <= i`` and ``d_{n-i} < n-i``, else ``None``.

    Degrees are sorted nondecreasingly and indexed from 1. For graphs with
    minimum degree at least 2, ``i = 1`` can never qualify.
    """
    n = g.n
    if n < 3:
        raise PreconditionError("Chvatal's condition is stated for n >= 3")
    d = DegreeProfile(g)
    i = 1
    while 2 * i < n:
        if d.d(i) <= i and d.d(n - i) < n - i:
            return i
        i += 1
    return None


def erdos_threshold(n: int, d: int) -> int:
    """Edge count above which minimum degree ``d`` forces a Hamiltonian cycle."""
    if d < 1 or n <= 2 * d:
        raise PreconditionError(f"need d >= 1 and n > 2d, got n={n}, d={d}")
    return max(comb(n - d, 2) + d * d, comb((n + 2) // 2, 2) + ((n - 1) // 2) ** 2)


def kopylov_path_bound_holds(g: Graph, p: PathWitness | list[int] | tuple[int, ...], *,
                             limit: int | None = None) -> bool:
    """Check ``c(G) >= min(l, d(x,P) + d(y,P))`` for an x,y-path ``P`` on ``l`` vertices."""
    if not isinstance(p, PathWitness):
        p = PathWitness(tuple(p))
    if not p.is_valid_in(g) or p.order < 2:
        raise PreconditionError("not a valid path with two distinct endpoints")
    if not is_two_connected(g):
        raise PreconditionError("the path bound is stated for 2-connected graphs")
    on_path = 0
    for v in p.vertices:
        on_path |= 1 << v
    dx = (g.adj[p.x] & on_path).bit_count()
    dy = (g.adj[p.y] & on_path).bit_count()
    need = min(p.order, dx + dy)
    return has_cycle_at_least(g, need, limit=limit)
