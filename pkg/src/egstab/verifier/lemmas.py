"""Instance tests of the supporting lemmas on generated and perturbed small graphs."""

from __future__ import annotations

import random
import time
from itertools import combinations

from ..connectivity import is_two_connected, safe_contraction_partner
from ..cycles import has_cycle_at_least
from ..extremal.bounds import h, half_floor
from ..extremal.constructions import build_H
from ..extremal.families import contains_F_member
from ..formats import emit_graph6
from ..graph import DegreeProfile, Graph, contract, min_edge_triangle
from ..procedures import core_mask, is_k_closed, k_closure, lemma9_holds, run_procedure
from .enumeration import EnumerationCursor, canonical_form, certificate, enumerate_graphs
from .report import CensusReport


def _g6(g: Graph) -> str:
    return emit_graph6(canonical_form(g))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


# -- r-index and the scope of the t-core statement ------------------------------


def r_index(g: Graph, t: int) -> int | None:
    """Smallest ``2 <= i <= t`` with ``d_i <= i`` and ``d_{n-i} < n-i``."""
    d = DegreeProfile(g)
    n = g.n
    for i in range(2, t + 1):
        if n - i < 1:
            break
        if d.d(i) <= i and d.d(n - i) < n - i:
            return i
    return None


def t_core_scope(g: Graph, k: int) -> str:
    """Why the nonempty-``t``-core statement does or does not apply to ``g``.

    It is asserted for dense graphs with ``n <= k + (t-1)/2`` whose modified
    procedure runs all the way down to ``k`` vertices and whose terminal
    graph has ``r < t``; the other cases are settled before it is used.
    Returns ``"in-scope"`` or a short reason.
    """
    t = half_floor(k)
    n = g.n
    if 2 * (n - k) > t - 1:
        return "order"
    if g.edge_count() <= h(n, k, t - 1):
        return "sparse"
    trace = run_procedure(g, k, "MBP", check_cycles=False)
    if trace.m != k:
        return "stops-above-k"
    r = r_index(trace.terminal, t)
    if r is None or r == t:
        return "r-equals-t"
    return "in-scope"


def check_t_core(g: Graph, k: int, rep: CensusReport) -> None:
    scope = t_core_scope(g, k)
    empty = not core_mask(g, half_floor(k))
    if scope != "in-scope":
        rep.tally(f"t-core.out-of-scope.{scope}")
        if empty:
            rep.tally("t-core.out-of-scope.empty")
        return
    rep.tally("t-core.checked")
    if empty:
        rep.tally("t-core.failed")
        rep.add_counterexample("t-core " + _g6(g))


# -- individual statements ---------------------------------------------------------


def check_contraction_partner(rep: CensusReport, n_max: int = 8) -> None:
    """Every vertex of a 2-connected graph on 4+ vertices has a safe contraction."""
    for n in range(4, n_max + 1):
        for g in enumerate_graphs(EnumerationCursor(n, two_connected=True)):
            for v in range(n):
                rep.tally("contraction-partner.checked")
                if safe_contraction_partner(g, v) is None:
                    rep.tally("contraction-partner.failed")
                    rep.add_counterexample(f"contraction-partner {_g6(g)} v={v}")


def check_contraction_monotonicity(rep: CensusReport, samples: int, rng: random.Random) -> None:
    """Degrees drop by at most one and the minimum triangle count by at most one."""
    done = 0
    while done < samples:
        n = rng.randint(3, 11)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        edges = list(g.edges())
        if not edges:
            continue
        u, v = rng.choice(edges)
        c = contract(g, (u, v))
        done += 1
        rep.tally("contraction-monotonicity.checked")
        # contract keeps u as the merged vertex and moves the last vertex into v's slot
        last = n - 1
        ok = c.degree(u) >= max(g.degree(u), g.degree(v)) - 1
        for w in range(n):
            if w in (u, v):
                continue
            image = v if w == last else w
            ok = ok and c.degree(image) >= g.degree(w) - 1
        if c.edge_count():
            ok = ok and min_edge_triangle(c) >= min_edge_triangle(g) - 1
        if not ok:
            rep.tally("contraction-monotonicity.failed")
            rep.add_counterexample(f"contraction-monotonicity {emit_graph6(g)} edge={u},{v}")


def check_core_order(rep: CensusReport, samples: int, rng: random.Random) -> None:
    """The ``alpha``-core is the same for every deletion order."""
    for _ in range(samples):
        n = rng.randint(1, 14)
        g = random_graph(rng, n, rng.random())
        alpha = rng.randint(0, max(0, n - 1))
        order = list(range(n))
        rng.shuffle(order)
        a = core_mask(g, alpha)
        rep.tally("core-order.checked")
        if a != core_mask(g, alpha, reversed(range(n))) or a != core_mask(g, alpha, order):
            rep.tally("core-order.failed")
            rep.add_counterexample(f"core-order {emit_graph6(g)} alpha={alpha}")


def check_k_closure(rep: CensusReport, n_max: int = 8, ks=range(6, 10)) -> None:
    """The closure keeps ``c < k``, contains the input, and is path-maximal."""
    for k in ks:
        for n in range(3, n_max + 1):
            for g in enumerate_graphs(EnumerationCursor(n, two_connected=True, max_circumference=k - 1)):
                rep.tally("k-closure.checked")
                cl = k_closure(g, k, check=False)
                contains = all(cl.adj[v] & g.adj[v] == g.adj[v] for v in range(n))
                if not contains or has_cycle_at_least(cl, k) or not is_k_closed(cl, k):
                    rep.tally("k-closure.failed")
                    rep.add_counterexample(f"k-closure {_g6(g)} k={k}")


def dense_sub_H(n: int, k: int) -> list[Graph]:
    """All spanning subgraphs of ``H_{n,k,t}`` with more than ``h(n,k,t-1)`` edges, up to isomorphism."""
    t = half_floor(k)
    top, _ = build_H(n, k, t)
    budget = top.edge_count() - h(n, k, t - 1) - 1
    layer = {certificate(top): top}
    out = dict(layer)
    for _ in range(budget):
        nxt = {}
        for g in layer.values():
            for e in g.edges():
                child = g.remove_edges([e])
                cert = certificate(child)
                if cert not in out and cert not in nxt:
                    nxt[cert] = child
        out.update(nxt)
        layer = nxt
    return [out[c] for c in sorted(out)]


def check_dense_sub_H(rep: CensusReport, n_max: int = 12, ks=(9, 10)) -> None:
    """Dense subgraphs of ``H_{n,k,t}`` contain a member of the family set for ``k``."""
    for k in ks:
        for n in range(k, n_max + 1):
            for g in dense_sub_H(n, k):
                rep.tally("dense-sub-H.checked")
                if contains_F_member(g, k) is None:
                    rep.tally("dense-sub-H.failed")
                    rep.add_counterexample(f"dense-sub-H {_g6(g)} k={k}")


def _perturbed_member(rng: random.Random, k: int, n: int) -> Graph | None:
    t = half_floor(k)
    a = rng.choice(sorted({t, t - 1, 3, 2}))
    g, _ = build_H(n, k, a)
    edges = list(g.edges())
    g = g.remove_edges(rng.sample(edges, rng.randint(0, min(3, len(edges)))))
    for _ in range(rng.randint(0, 4)):
        x, y = rng.sample(range(n), 2)
        if g.has_edge(x, y):
            continue
        cand = g.add_edges([(x, y)])
        if not has_cycle_at_least(cand, k):
            g = cand
    return g if is_two_connected(g) else None


def check_contraction_lifts_family(rep: CensusReport, samples: int, rng: random.Random) -> None:
    """If ``F'/xy`` contains a family member, so does ``F'`` (``c(F') < k``)."""
    done = 0
    tries = 0
    while done < samples and tries < 50 * samples:
        tries += 1
        k = rng.choice((9, 10))
        n = rng.randint(k + 1, k + 2)
        fp = _perturbed_member(rng, k, n)
        if fp is None:
            continue
        e = rng.choice(list(fp.edges()))
        f = contract(fp, e)
        if not is_two_connected(f) or contains_F_member(f, k) is None:
            continue
        done += 1
        rep.tally("contraction-lift.checked")
        if contains_F_member(fp, k) is None:
            rep.tally("contraction-lift.failed")
            rep.add_counterexample(f"contraction-lift {emit_graph6(fp)} edge={e.u},{e.v} k={k}")


def check_degree_dichotomy(rep: CensusReport, samples: int, rng: random.Random) -> None:
    """Along modified-procedure traces, each minimum-degree contraction obeys the dichotomy.

    The statement itself needs no density, so traces are run with the
    density audit relaxed; orders stay within ``k + (t-1)/2``.
    """
    done = 0
    tries = 0
    while done < samples and tries < 50 * samples:
        tries += 1
        k = rng.choice((9, 10, 11, 12))
        t = half_floor(k)
        n = rng.randint(k + 1, k + max(1, (t - 1) // 2))
        g = _perturbed_member(rng, k, n)
        if g is None:
            continue
        trace = run_procedure(g, k, "MBP", require_dense=False, check_cycles=False)
        done += 1
        rep.tally("degree-dichotomy.traces")
        for step, before, after in zip(trace.steps, trace.graphs, trace.graphs[1:]):
            if step.rule != "MBP2":
                continue
            for hh in range(1, before.n + 1):
                rep.tally("degree-dichotomy.checked")
                if not lemma9_holds(before, after, hh):
                    rep.tally("degree-dichotomy.failed")
                    rep.add_counterexample(f"degree-dichotomy {emit_graph6(before)} h={hh} k={k}")


def check_lemma_statements(samples: int = 10_000, *, seed: int = 0, closure_n: int = 8,
                           sub_h_n: int = 12, lift_samples: int | None = None,
                           trace_samples: int | None = None) -> CensusReport:
    """Run every instance suite and collect the results in one report.

    ``samples`` drives the random suites (contractions and cores); the
    family-lift and trace suites default to a hundredth of it since each
    sample costs a family search or a full procedure run.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    lift_samples = max(1, samples // 100) if lift_samples is None else lift_samples
    trace_samples = max(1, samples // 100) if trace_samples is None else trace_samples
    rep = CensusReport("lemmas", {"samples": samples, "seed": seed, "closure_n": closure_n,
                                  "sub_h_n": sub_h_n})
    check_contraction_partner(rep, closure_n)
    check_contraction_monotonicity(rep, samples, rng)
    check_core_order(rep, samples, rng)
    check_k_closure(rep, closure_n)
    check_dense_sub_H(rep, sub_h_n)
    check_contraction_lifts_family(rep, lift_samples, rng)
    check_degree_dichotomy(rep, trace_samples, rng)
    rep.scanned = rep.filtered = sum(v for key, v in rep.tallies.items() if key.endswith(".checked"))
    rep.wall_time = time.perf_counter() - start
    return rep.normalize()
