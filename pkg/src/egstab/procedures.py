"""Reduction machinery: cores, k-closure and the two contraction procedures.

Both procedures shrink a dense 2-connected graph without long cycles one
step at a time, either by contracting a low-triangle edge or by cutting off
a ``K_{t-1}`` hanging on an edge. Every step is recorded so the invariants
can be audited afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .config import DEFAULT_STEP_BUDGET, exact_limit
from .connectivity import components_mask, is_two_connected
from .cycles import has_cycle_at_least, has_path_at_least
from .errors import InvariantViolation, PreconditionError, ProcedureInvariantError, SearchLimitError
from .extremal.bounds import h, half_floor
from .graph import Graph, bits, contract, induced_subgraph_mask, min_edge_triangle, triangle_count_edge

# -- cores --------------------------------------------------------------------


def core_mask(g: Graph, alpha: int, order=None) -> int:
    """Vertices surviving repeated deletion of vertices of degree at most ``alpha``.

    Each round sweeps the live vertices in ``order`` (ascending by default)
    and deletes those whose current degree is at most ``alpha``.
    """
    order = list(range(g.n)) if order is None else list(order)
    alive = g.full_mask()
    changed = True
    while changed:
        changed = False
        for v in order:
            if alive >> v & 1 and (g.adj[v] & alive).bit_count() <= alpha:
                alive &= ~(1 << v)
                changed = True
    return alive


def alpha_core(g: Graph, alpha: int) -> Graph:
    """The ``(alpha+1)``-core: largest subgraph of minimum degree above ``alpha``.

    Surviving vertices keep their relative order; the result may be empty.
    """
    if alpha < 0:
        raise PreconditionError(f"alpha must be nonnegative, got {alpha}")
    return induced_subgraph_mask(g, core_mask(g, alpha))


# -- k-closure ----------------------------------------------------------------


def k_closure(g: Graph, k: int, *, limit: int | None = None, check: bool = True) -> Graph:
    """Add non-edges in lexicographic order while no cycle of length ``>= k`` appears.

    Adding ``xy`` is safe exactly when every x,y-path has at most ``k-2``
    edges. Adding edges only lengthens paths, so a rejected pair stays
    rejected and one pass already reaches the fixpoint.
    """
    limit = exact_limit() if limit is None else limit
    if g.n > limit:
        raise SearchLimitError(f"k-closure limited to {limit} vertices, got {g.n}")
    if check and has_cycle_at_least(g, k):
        raise PreconditionError(f"input already has a cycle of length at least {k}")
    adj = list(g.adj)
    cur = g
    for x, y in combinations(range(g.n), 2):
        if adj[x] >> y & 1:
            continue
        if not has_path_at_least(cur, x, y, k - 1):
            adj[x] |= 1 << y
            adj[y] |= 1 << x
            cur = Graph(g.n, adj, _trusted=True)
    return cur


def is_k_closed(g: Graph, k: int) -> bool:
    """Every non-edge already has an x,y-path with at least ``k-1`` edges."""
    return all(has_path_at_least(g, x, y, k - 1) for x, y in g.non_edges())


# -- single steps -------------------------------------------------------------


@dataclass(frozen=True)
class StepOutcome:
    """``kind`` is ``stop``, ``contract`` or ``remove``; ``graph`` is the next graph."""

    kind: str
    rule: str
    edge: tuple[int, int] | None = None
    removed: tuple[int, ...] | None = None
    graph: Graph | None = None


def _require_2conn(g: Graph) -> None:
    if not is_two_connected(g):
        raise PreconditionError("procedure steps require a 2-connected graph")


def _bp2_choice(g: Graph, t: int) -> tuple[int, int] | None:
    deg = g.degrees()
    best = None
    for e in g.edges():
        tri = triangle_count_edge(g, e)
        if tri > t - 2:
            continue
        key = (tri, min(deg[e.u], deg[e.v]), e.u, e.v)
        if best is not None and key >= best[0]:
            continue
        if is_two_connected(contract(g, e)):
            best = (key, (e.u, e.v))
    return None if best is None else best[1]


def _bp3_block(g: Graph, t: int) -> tuple[int, ...] | None:
    full = g.full_mask()
    found = None
    for x, y in g.edges():
        rest = full & ~(1 << x) & ~(1 << y)
        comps = components_mask(g, rest)
        if len(comps) < 3:
            continue
        for c in comps:
            if c.bit_count() != t - 1:
                continue
            if all((g.adj[v] & c).bit_count() == t - 2 for v in bits(c)):
                verts = tuple(bits(c))
                if found is None or verts < found:
                    found = verts
    return found


def bp_step(g: Graph, k: int, t: int | None = None) -> StepOutcome:
    """One round of the basic procedure (rules BP1 to BP4, in order)."""
    t = half_floor(k) if t is None else t
    _require_2conn(g)
    j = g.n
    if j == k:
        return StepOutcome("stop", "BP1")
    e = _bp2_choice(g, t)
    if e is not None:
        return StepOutcome("contract", "BP2", edge=e, graph=contract(g, e))
    if j >= k + t - 1:
        block = _bp3_block(g, t)
        if block is not None:
            keep = g.full_mask()
            for v in block:
                keep &= ~(1 << v)
            return StepOutcome("remove", "BP3", removed=block, graph=induced_subgraph_mask(g, keep))
    return StepOutcome("stop", "BP4")


def mbp_step(g: Graph, k: int, t: int | None = None) -> StepOutcome:
    """One round of the modified procedure (MBP0 delegates to :func:`bp_step`)."""
    t = half_floor(k) if t is None else t
    _require_2conn(g)
    delta = g.min_degree()
    if delta >= t:
        inner = bp_step(g, k, t)
        return StepOutcome(inner.kind, "MBP0/" + inner.rule, inner.edge, inner.removed, inner.graph)
    if g.n == k:
        return StepOutcome("stop", "MBP1")
    v = g.degrees().index(delta)
    best = None
    for u in g.neighbors(v):
        tri = triangle_count_edge(g, (v, u))
        if best is not None and tri >= best[0]:
            continue
        if is_two_connected(contract(g, (v, u))):
            best = (tri, u)
    if best is None:
        raise InvariantViolation(f"no 2-connectivity-preserving edge at vertex {v}")
    e = (v, best[1])
    return StepOutcome("contract", "MBP2", edge=e, graph=contract(g, e))


# -- full runs ----------------------------------------------------------------


@dataclass(frozen=True)
class ProcedureStep:
    rule: str
    edge: tuple[int, int] | None
    removed: tuple[int, ...] | None
    j_before: int
    j_after: int
    edges_before: int
    edges_after: int
    min_degree: int
    min_triangle: int

    def as_dict(self) -> dict:
        return {
            "rule": self.rule,
            "edge": list(self.edge) if self.edge else None,
            "removed": list(self.removed) if self.removed else None,
            "j_before": self.j_before,
            "j_after": self.j_after,
            "edges_before": self.edges_before,
            "edges_after": self.edges_after,
            "min_degree": self.min_degree,
            "min_triangle": self.min_triangle,
        }


@dataclass
class ProcedureTrace:
    variant: str
    k: int
    t: int
    steps: list[ProcedureStep] = field(default_factory=list)
    graphs: list[Graph] = field(default_factory=list)
    stop_rule: str | None = None

    @property
    def terminal(self) -> Graph:
        return self.graphs[-1]

    @property
    def m(self) -> int:
        return self.terminal.n

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "k": self.k,
            "t": self.t,
            "steps": [s.as_dict() for s in self.steps],
            "stop_rule": self.stop_rule,
            "m": self.m,
            "terminal_edges": self.terminal.edge_count(),
        }

    def lines(self) -> list[str]:
        out = [f"variant {self.variant} k={self.k} t={self.t} start j={self.graphs[0].n} "
               f"e={self.graphs[0].edge_count()}"]
        for s in self.steps:
            what = f"edge {s.edge}" if s.edge else f"block {list(s.removed)}" if s.removed else "-"
            out.append(f"{s.rule} {what} j {s.j_before}->{s.j_after} e {s.edges_before}->{s.edges_after} "
                       f"delta {s.min_degree} T {s.min_triangle}")
        out.append(f"stop {self.stop_rule} m={self.m} e={self.terminal.edge_count()}")
        return out


def run_procedure(g: Graph, k: int, variant: str = "BP", *, require_dense: bool = True,
                  check_cycles: bool = True, budget: int = DEFAULT_STEP_BUDGET) -> ProcedureTrace:
    """Iterate the chosen step until it stops, auditing every intermediate graph.

    With ``require_dense`` the start must satisfy ``e(G) > h(n,k,t-1)`` and
    that inequality is re-checked at every ``j``; with it off the run still
    proceeds but densities are only recorded. A failed audit raises
    :class:`ProcedureInvariantError` carrying the partial trace.
    """
    variant = variant.upper()
    if variant not in ("BP", "MBP"):
        raise PreconditionError(f"variant must be BP or MBP, got {variant!r}")
    t = half_floor(k)
    if k < 9:
        raise PreconditionError(f"the procedures are set up for k >= 9, got {k}")
    if g.n < k:
        raise PreconditionError(f"need n >= k, got n={g.n}, k={k}")
    _require_2conn(g)
    if check_cycles and has_cycle_at_least(g, k):
        raise PreconditionError(f"input has a cycle of length at least {k}")
    if require_dense and g.edge_count() <= h(g.n, k, t - 1):
        raise PreconditionError(f"need e(G) > h(n,k,t-1) = {h(g.n, k, t - 1)}, got {g.edge_count()}")

    step_fn = bp_step if variant == "BP" else mbp_step
    trace = ProcedureTrace(variant, k, t, graphs=[g])
    cur = g
    for _ in range(budget):
        out = step_fn(cur, k, t)
        if out.kind == "stop":
            trace.stop_rule = out.rule
            return trace
        nxt = out.graph
        trace.steps.append(ProcedureStep(out.rule, out.edge, out.removed, cur.n, nxt.n,
                                         cur.edge_count(), nxt.edge_count(), cur.min_degree(),
                                         min_edge_triangle(cur)))
        trace.graphs.append(nxt)
        if not is_two_connected(nxt):
            raise ProcedureInvariantError(f"step {len(trace.steps)} lost 2-connectivity", trace)
        if nxt.n < k:
            raise ProcedureInvariantError(f"step {len(trace.steps)} went below k vertices", trace)
        if require_dense and nxt.edge_count() <= h(nxt.n, k, t - 1):
            raise ProcedureInvariantError(
                f"step {len(trace.steps)} left e = {nxt.edge_count()} <= h({nxt.n},{k},{t - 1})", trace)
        if check_cycles and has_cycle_at_least(nxt, k):
            raise ProcedureInvariantError(f"step {len(trace.steps)} created a cycle of length >= {k}", trace)
        cur = nxt
    raise ProcedureInvariantError(f"no stop within {budget} steps", trace)


def lemma9_holds(before: Graph, after: Graph, hh: int) -> bool:
    """Degree dichotomy for one minimum-degree contraction ``before -> after``.

    If ``after`` has at least ``hh`` vertices of degree at most ``hh`` then
    ``before`` is ``K_{hh+2}`` or it has a vertex of degree at most ``hh``
    and at least ``hh+1`` vertices of degree at most ``hh+1``.
    """
    deg_after = after.degrees()
    if sum(1 for d in deg_after if d <= hh) < hh:
        return True
    deg = before.degrees()
    if before.n == hh + 2 and before.edge_count() == (hh + 2) * (hh + 1) // 2:
        return True
    return min(deg) <= hh and sum(1 for d in deg if d <= hh + 1) >= hh + 1
