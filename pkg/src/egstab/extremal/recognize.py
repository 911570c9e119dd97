"""Recognizers: is a graph a spanning subgraph of some member of a class?

All searches enumerate the candidate part ``A`` in lexicographic order and
return the first embedding found.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..config import search_limit
from ..connectivity import components_mask, is_two_connected
from ..cycles import has_cycle_at_least
from ..errors import PreconditionError, SearchLimitError
from ..graph import Graph, bits, mask_of
from .bounds import h, half_floor, stability_bound, validate_params
from .constructions import HPartition
from .families import FWitness, contains_F_member


def _check_size(g: Graph, limit: int | None) -> None:
    limit = search_limit() if limit is None else limit
    if g.n > limit:
        raise SearchLimitError(f"recognizers are limited to {limit} vertices, got {g.n}")


def is_subgraph_of_H(g: Graph, k: int, a: int, *, limit: int | None = None) -> HPartition | None:
    """Partition ``A, B, C`` placing ``g`` inside ``H_{n,k,a}``, or ``None``.

    ``B`` must be independent with every neighbourhood inside ``A``; in other
    words ``G - A`` needs at least ``n-k+a`` isolated vertices.
    """
    n = g.n
    if n < k:
        raise PreconditionError(f"need n >= k, got n={n}, k={k}")
    validate_params(n, k, a)
    _check_size(g, limit)
    if g.edge_count() > h(n, k, a):
        return None
    b_size = n - k + a
    full = g.full_mask()
    # a vertex of degree above a cannot sit in B, and B is large
    low = [v for v in range(n) if g.degree(v) <= a]
    if len(low) < b_size:
        return None
    for A in combinations(range(n), a):
        am = mask_of(A)
        free = [v for v in low if not am >> v & 1 and not g.adj[v] & ~am]
        if len(free) >= b_size:
            B = frozenset(free[:b_size])
            C = frozenset(range(n)) - B - frozenset(A)
            assert mask_of(B) | mask_of(C) | am == full
            return HPartition(frozenset(A), B, C)
    return None


def is_star(g: Graph, comp: int) -> int | None:
    """Centre of the star ``G[comp]`` (its least vertex if ambiguous), else ``None``."""
    verts = list(bits(comp))
    if len(verts) <= 2:
        return verts[0]
    m = len(verts) - 1
    inside = [(g.adj[v] & comp).bit_count() for v in verts]
    if sum(inside) != 2 * m:
        return None
    centres = [v for v, d in zip(verts, inside) if d == m]
    return centres[0] if centres else None


def is_star_forest(g: Graph, allowed: int | None = None) -> bool:
    """Every component is some ``K_{1,m}``, with isolated vertices allowed."""
    return all(is_star(g, c) is not None for c in components_mask(g, allowed))


@dataclass(frozen=True)
class ClassEmbedding:
    """How ``G`` sits inside a member of one class; parts are sorted tuples."""

    tag: str
    parts: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"tag": self.tag, **{key: list(v) if isinstance(v, tuple) else v
                                     for key, v in self.parts.items()}}


def _leaf_anchors(g: Graph, stars, am: int) -> list[int | None] | None:
    """Common ``A``-neighbour of the leaves of each star with 3+ vertices.

    Entries are ``None`` for small stars and ``-1`` when the leaves see no
    vertex of ``A`` at all (any anchor works). ``None`` overall means some
    star's leaves see two different vertices of ``A``.
    """
    out = []
    for comp, centre in stars:
        if comp.bit_count() < 3:
            out.append(None)
            continue
        leaf_a = 0
        for leaf in bits(comp & ~(1 << centre)):
            leaf_a |= g.adj[leaf] & am
        if leaf_a.bit_count() > 1:
            return None
        out.append(leaf_a.bit_length() - 1)
    return out


def _outside(n: int, am: int) -> list[int]:
    return [v for v in range(n) if not am >> v & 1]


def embed_G2(g: Graph, k: int) -> ClassEmbedding | None:
    """``A = K_t`` complete to independent ``B``; each ``c`` in ``C`` sees only ``a1, b1``."""
    t = half_floor(k)
    n = g.n
    for A in combinations(range(n), t):
        am = mask_of(A)
        rest = _outside(n, am)
        for b1 in rest:
            for a1 in A:
                allowed_c = (1 << a1) | (1 << b1)
                B, C = [b1], []
                ok = True
                for v in rest:
                    if v == b1:
                        continue
                    nb = g.adj[v]
                    if g.adj[v] >> b1 & 1 or nb & ~am:
                        if nb & ~allowed_c:
                            ok = False
                            break
                        C.append(v)
                    else:
                        B.append(v)
                if not ok:
                    continue
                if not C:
                    # move a B-vertex that only sees a1 (or nothing) into C
                    spare = [v for v in B[1:] if not g.adj[v] & ~(1 << a1)]
                    if not spare:
                        continue
                    B.remove(spare[0])
                    C.append(spare[0])
                return ClassEmbedding("G2", {"A": A, "B": tuple(sorted(B)), "C": tuple(sorted(C)),
                                             "a1": a1, "b1": b1})
    return None


def embed_G3(g: Graph, k: int) -> ClassEmbedding | None:
    """``A = K_t`` complete to independent ``B``; ``J`` a forest of 2+ stars hung on ``A'``."""
    t = half_floor(k)
    n = g.n
    full = g.full_mask()
    for A in combinations(range(n), t):
        am = mask_of(A)
        rest = full & ~am
        comps = [c for c in components_mask(g, rest) if c & (c - 1)]
        j0 = 0
        for c in comps:
            j0 |= c
        j_nbrs = 0
        for v in bits(j0):
            j_nbrs |= g.adj[v] & am
        if j_nbrs.bit_count() > 2:
            continue
        stars = []
        ok = True
        for c in comps:
            centre = is_star(g, c)
            if centre is None:
                ok = False
                break
            stars.append((c, centre))
        if not ok:
            continue
        leaf_sides = _leaf_anchors(g, stars, am)
        if leaf_sides is None:
            continue
        for pair in combinations(A, 2):
            pm = mask_of(pair)
            if j_nbrs & ~pm:
                continue
            anchors = [None if side is None else (side if side >= 0 else pair[0]) for side in leaf_sides]
            floating = [v for v in bits(rest & ~j0) if not g.adj[v] & ~pm]
            q = len(comps)
            need = 0 if q >= 2 else (2 if q == 1 else 4)
            if len(floating) < need:
                continue
            extra = floating[:need]
            J = sorted(list(bits(j0)) + extra)
            B = sorted(set(bits(rest)) - set(J))
            return ClassEmbedding("G3", {
                "A": A, "A_prime": pair, "B": tuple(B), "J": tuple(J),
                "stars": [sorted(bits(c)) for c, _ in stars] + [extra[i:i + 2] for i in range(0, need, 2)],
                "anchors": anchors,
            })
    return None


def embed_G4(g: Graph, k: int, *, max_star: int | None = None) -> ClassEmbedding | None:
    """``A = K_3`` and ``G - A`` a star forest; larger stars hang their leaves on one ``a(S)``.

    ``max_star=2`` gives the restricted shape where every component of
    ``G - A`` has at most two vertices.
    """
    if k != 10:
        return None
    n = g.n
    full = g.full_mask()
    for A in combinations(range(n), 3):
        am = mask_of(A)
        comps = components_mask(g, full & ~am)
        if max_star is not None and any(c.bit_count() > max_star for c in comps):
            continue
        stars = [(c, is_star(g, c)) for c in comps]
        if any(centre is None for _, centre in stars):
            continue
        sides = _leaf_anchors(g, stars, am)
        if sides is None:
            continue
        anchors = [side if side >= 0 else A[0] for side in sides if side is not None]
        return ClassEmbedding("G4", {"A": A, "stars": [sorted(bits(c)) for c in comps],
                                     "anchors": anchors})
    return None


def embed_corollary_shape(g: Graph, k: int) -> ClassEmbedding | None:
    return embed_G4(g, k, max_star=2)


VERDICTS = ("BelowBound", "SubgraphH2", "InClassWithWitness", "Counterexample")


@dataclass(frozen=True)
class Classification:
    verdict: str
    class_tag: str | None = None
    witness: FWitness | None = None
    embedding: dict | None = None

    def as_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.class_tag is not None:
            out["class"] = self.class_tag
        if self.embedding is not None:
            out["embedding"] = self.embedding
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


def _partition_dict(p: HPartition) -> dict:
    return {"A": sorted(p.A), "B": sorted(p.B), "C": sorted(p.C)}


def class_embedding(g: Graph, k: int) -> ClassEmbedding | None:
    """First class of the dense part of the theorem that contains ``g``."""
    t = half_floor(k)
    p = is_subgraph_of_H(g, k, t)
    if p is not None:
        return ClassEmbedding("G1t", _partition_dict(p))
    if k % 2 == 0:
        for embed in (embed_G2, embed_G3):
            e = embed(g, k)
            if e is not None:
                return e
    if k == 10:
        return embed_G4(g, k)
    return None


def classify(g: Graph, k: int, *, check: bool = True, limit: int | None = None) -> Classification:
    """Place a 2-connected graph without long cycles in the stability picture.

    With ``check=False`` the caller vouches for 2-connectivity and ``c < k``
    (the census has already verified both).
    """
    n = g.n
    if k < 9 or n < k:
        raise PreconditionError(f"classify needs n >= k >= 9, got n={n}, k={k}")
    _check_size(g, limit)
    if check:
        if not is_two_connected(g):
            raise PreconditionError("classify requires a 2-connected graph")
        if has_cycle_at_least(g, k):
            raise PreconditionError(f"graph has a cycle of length at least {k}")
    if g.edge_count() <= stability_bound(n, k):
        return Classification("BelowBound")
    p = is_subgraph_of_H(g, k, 2)
    if p is not None:
        return Classification("SubgraphH2", "G1two", embedding=_partition_dict(p))
    emb = class_embedding(g, k)
    if emb is None:
        return Classification("Counterexample")
    w = contains_F_member(g, k, limit=limit)
    if w is None:
        return Classification("Counterexample", emb.tag, embedding=emb.as_dict())
    return Classification("InClassWithWitness", emb.tag, w, emb.as_dict())
