"""Search for members of the dense families ``F0..F4`` inside a host graph.

Containment is ordinary (not induced) subgraph containment, so for a fixed
part ``A`` the best part ``B`` is always made of the outside vertices with the
most neighbours in ``A``. Candidates ``A`` are scanned in lexicographic order
and the first witness found is returned, which makes answers reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..config import search_limit
from ..errors import PreconditionError, SearchLimitError
from ..graph import Graph, bits, mask_of
from .bounds import half_floor


@dataclass(frozen=True)
class FWitness:
    """Vertices of the host that carry a family member.

    ``a1``/``b1``/``c1`` are set for ``F2``; ``c1``, ``c2`` with ``A1``, ``A2``
    for ``F3`` and ``F4prime`` (where ``A1 == A2``).
    """

    tag: str
    A: tuple[int, ...]
    B: tuple[int, ...]
    c1: int | None = None
    c2: int | None = None
    a1: int | None = None
    b1: int | None = None
    A1: tuple[int, ...] = ()
    A2: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        out: dict = {"tag": self.tag, "A": list(self.A), "B": list(self.B)}
        for key in ("c1", "c2", "a1", "b1"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.A1:
            out["A1"] = list(self.A1)
            out["A2"] = list(self.A2)
        return out


def cross_edges(g: Graph, A, B) -> int:
    am = mask_of(A)
    return sum((g.adj[b] & am).bit_count() for b in B)


def family_floor(tag: str, t: int) -> int:
    """Minimum number of ``A x B`` edges a member must keep."""
    if tag == "F0":
        return t * (t + 1) - t + 3
    if tag in ("F1", "F2"):
        return t * (t + 2) - t + 4
    if tag == "F3":
        return t * t - t + 4
    if tag == "F4":
        return 18
    if tag == "F4prime":
        return 16
    raise PreconditionError(f"unknown family tag {tag!r}")


def families_for(k: int) -> tuple[str, ...]:
    if k % 2:
        return ("F0",)
    if half_floor(k) == 4:
        return ("F1", "F2", "F3", "F4", "F4prime")
    return ("F1", "F2", "F3")


def _best(counts: dict[int, int], pool, size: int) -> tuple[tuple[int, ...], int] | None:
    ranked = sorted(pool, key=lambda v: (-counts[v], v))
    if len(ranked) < size:
        return None
    chosen = ranked[:size]
    return tuple(sorted(chosen)), sum(counts[v] for v in chosen)


def _search_bipartite(g, t, tag, nb):
    floor = family_floor(tag, t)
    n = g.n
    for A in combinations(range(n), t):
        am = mask_of(A)
        counts = {v: (g.adj[v] & am).bit_count() for v in range(n) if not am >> v & 1}
        got = _best(counts, counts, nb)
        if got and got[1] >= floor:
            return FWitness(tag, A, got[0])
    return None


def _search_f2(g, t):
    floor = family_floor("F2", t)
    n = g.n
    for A in combinations(range(n), t):
        am = mask_of(A)
        counts = {v: (g.adj[v] & am).bit_count() for v in range(n) if not am >> v & 1}
        for c1 in counts:
            a_side = g.adj[c1] & am
            if not a_side:
                continue
            for b1 in bits(g.adj[c1] & ~am):
                pool = [v for v in counts if v not in (c1, b1)]
                got = _best(counts, pool, t + 1)
                if got is None:
                    continue
                for a1 in bits(a_side):
                    # the subdivided pair a1b1 counts once, as the path a1-c1-b1
                    kept = counts[b1] - (g.adj[b1] >> a1 & 1) + 1
                    if got[1] + kept >= floor:
                        B = tuple(sorted(got[0] + (b1,)))
                        return FWitness("F2", A, B, c1=c1, a1=a1, b1=b1)
    return None


def _disjoint_pairs(n1: int, n2: int):
    for p in combinations(bits(n1), 2):
        pm = mask_of(p)
        for q in combinations(bits(n2 & ~pm), 2):
            return p, q
    return None


def _search_f3(g, t):
    floor = family_floor("F3", t)
    n = g.n
    for A in combinations(range(n), t):
        am = mask_of(A)
        counts = {v: (g.adj[v] & am).bit_count() for v in range(n) if not am >> v & 1}
        for c1 in counts:
            for c2 in bits(g.adj[c1] & ~am):
                if c2 == c1:
                    continue
                split = _disjoint_pairs(g.adj[c1] & am, g.adj[c2] & am)
                if split is None:
                    continue
                pool = [v for v in counts if v not in (c1, c2)]
                got = _best(counts, pool, t)
                if got and got[1] >= floor:
                    return FWitness("F3", A, got[0], c1=c1, c2=c2, A1=split[0], A2=split[1])
    return None


def _matching3(g: Graph, pool: int):
    verts = list(bits(pool))
    edges = [(u, v) for u, v in combinations(verts, 2) if g.adj[u] >> v & 1]
    for trio in combinations(edges, 3):
        used = set()
        ok = True
        for u, v in trio:
            if u in used or v in used:
                ok = False
                break
            used.update((u, v))
        if ok:
            return trio
    return None


def _search_f4(g):
    n = g.n
    for A in combinations(range(n), 3):
        common = g.full_mask() & ~mask_of(A)
        for a in A:
            common &= g.adj[a]
        if common.bit_count() < 6:
            continue
        trio = _matching3(g, common)
        if trio:
            B = tuple(x for e in trio for x in e)
            return FWitness("F4", A, B)
    return None


def _search_f4prime(g):
    n = g.n
    for A in combinations(range(n), 4):
        am = mask_of(A)
        common = g.full_mask() & ~am
        for a in A:
            common &= g.adj[a]
        for c1 in range(n):
            if am >> c1 & 1:
                continue
            for c2 in bits(g.adj[c1] & ~am):
                if c2 < c1:
                    continue
                shared = g.adj[c1] & g.adj[c2] & am
                if shared.bit_count() < 3:
                    continue
                rest = common & ~(1 << c1) & ~(1 << c2)
                if rest.bit_count() < 4:
                    continue
                B = tuple(list(bits(rest))[:4])
                three = tuple(list(bits(shared))[:3])
                return FWitness("F4prime", A, B, c1=c1, c2=c2, A1=three, A2=three)
    return None


def find_family_member(g: Graph, tag: str, t: int) -> FWitness | None:
    if tag == "F0":
        return _search_bipartite(g, t, "F0", t + 1)
    if tag == "F1":
        return _search_bipartite(g, t, "F1", t + 2)
    if tag == "F2":
        return _search_f2(g, t)
    if tag == "F3":
        return _search_f3(g, t)
    if tag == "F4":
        return _search_f4(g) if t == 4 else None
    if tag == "F4prime":
        return _search_f4prime(g) if t == 4 else None
    raise PreconditionError(f"unknown family tag {tag!r}")


def contains_F_member(g: Graph, k: int, *, limit: int | None = None) -> FWitness | None:
    """First member of the family set for ``k`` found in ``g``, or ``None``."""
    if k < 9:
        raise PreconditionError(f"the families are defined for k >= 9, got {k}")
    limit = search_limit() if limit is None else limit
    if g.n > limit:
        raise SearchLimitError(f"family search limited to {limit} vertices, got {g.n}")
    t = half_floor(k)
    for tag in families_for(k):
        w = find_family_member(g, tag, t)
        if w is not None:
            return w
    return None


def witness_holds(g: Graph, k: int, w: FWitness) -> bool:
    """Re-check a witness against the host from the definitions alone."""
    t = half_floor(k)
    if w.tag not in families_for(k):
        return False
    extra = [x for x in (w.c1, w.c2) if x is not None]
    used = list(w.A) + list(w.B) + extra
    if len(set(used)) != len(used) or any(not 0 <= v < g.n for v in used):
        return False
    A, B = set(w.A), set(w.B)
    sizes = {"F0": (t, t + 1), "F1": (t, t + 2), "F2": (t, t + 2),
             "F3": (t, t), "F4": (3, 6), "F4prime": (4, 4)}[w.tag]
    if (len(A), len(B)) != sizes:
        return False
    pairs = sum(1 for a in A for b in B if g.has_edge(a, b))
    if w.tag in ("F0", "F1", "F3"):
        if w.tag == "F3":
            if w.c1 is None or w.c2 is None or not g.has_edge(w.c1, w.c2):
                return False
            if len(w.A1) != 2 or len(w.A2) != 2 or set(w.A1) & set(w.A2):
                return False
            if not set(w.A1 + w.A2) <= A:
                return False
            if not all(g.has_edge(w.c1, a) for a in w.A1) or not all(g.has_edge(w.c2, a) for a in w.A2):
                return False
        return pairs >= family_floor(w.tag, t)
    if w.tag == "F2":
        if w.c1 is None or w.a1 not in A or w.b1 not in B:
            return False
        if not (g.has_edge(w.c1, w.a1) and g.has_edge(w.c1, w.b1)):
            return False
        pairs -= int(g.has_edge(w.a1, w.b1))
        return pairs + 1 >= family_floor("F2", t)
    if w.tag == "F4":
        b = list(w.B)
        matched = all(g.has_edge(b[i], b[i + 1]) for i in (0, 2, 4))
        return matched and pairs == 18
    # F4prime
    if w.c1 is None or w.c2 is None or not g.has_edge(w.c1, w.c2):
        return False
    if len(set(w.A1)) != 3 or not set(w.A1) <= A:
        return False
    attached = all(g.has_edge(c, a) for c in (w.c1, w.c2) for a in w.A1)
    return attached and pairs == 16
