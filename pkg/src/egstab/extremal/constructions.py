"""Generators for the extremal graphs and the dense families they contain.

Vertex layout is fixed so that outputs are reproducible: part ``A`` first,
then ``B``, then the remaining parts in the order they are named.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import PreconditionError
from ..graph import Graph
from .bounds import ExtremalParams, half_floor


@dataclass(frozen=True)
class HPartition:
    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]

    def as_lists(self) -> dict[str, list[int]]:
        return {"A": sorted(self.A), "B": sorted(self.B), "C": sorted(self.C)}


def h_graph_from_parts(a: int, b: int, c: int) -> tuple[Graph, HPartition]:
    """``A`` complete to ``B``, ``A ∪ C`` a clique, ``B`` independent."""
    n = a + b + c
    A = range(a)
    B = range(a, a + b)
    C = range(a + b, n)
    edges = [(x, y) for x in A for y in B]
    edges += list(combinations(list(A) + list(C), 2))
    return Graph.from_edges(n, edges), HPartition(frozenset(A), frozenset(B), frozenset(C))


def build_H(n: int, k: int, a: int) -> tuple[Graph, HPartition]:
    """The n-vertex graph with ``|A| = a``, ``|B| = n-k+a``, ``|C| = k-2a``."""
    ExtremalParams(n, k, a)
    return h_graph_from_parts(a, n - k + a, k - 2 * a)


def block_chain(n: int, k: int) -> Graph:
    """Connected graph whose blocks are all ``K_{k-1}``, glued in a path.

    Requires ``(k-2) | (n-1)``; it has exactly ``(k-1)(n-1)/2`` edges.
    """
    if k < 3 or (n - 1) % (k - 2):
        raise PreconditionError(f"need (k-2) | (n-1), got n={n}, k={k}")
    edges = []
    start = 0
    while start + k - 2 < n:
        block = range(start, start + k - 1)
        edges += list(combinations(block, 2))
        start += k - 2
    return Graph.from_edges(n, edges)


# -- the classes G2, G3, G4 ---------------------------------------------------


class GClassSpecError(PreconditionError):
    """A class-member description breaks one of the defining conditions.

    ``code`` names the condition, e.g. ``"g3-components"``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(f"[{code}] {message}")
        self.code = code


CLASS_TAGS = ("G1t", "G1two", "G2", "G3", "G4")


@dataclass(frozen=True)
class GClassSpec:
    """Shape of one member of a class ``G_i(n, k)``.

    * ``G1t`` / ``G1two``: no extra fields (``H_{n,k,t}`` / ``H_{n,k,2}``).
    * ``G2``: ``b_size >= 1`` and ``c_size >= 1``; ``a1`` is the first vertex of
      ``A`` and ``b1`` the first vertex of ``B``.
    * ``G3``: ``b_size`` and ``stars`` (vertex counts, each at least 2, at least
      two stars); ``anchors[i]`` gives ``a(S)`` as 0 or 1 (an index into ``A'``)
      for every star with at least 3 vertices.
    * ``G4``: only for ``k = 10``; ``stars`` may contain 1- and 2-vertex stars
      and ``anchors[i]`` indexes ``A`` (0..2) for larger stars.
    """

    tag: str
    b_size: int = 0
    c_size: int = 0
    stars: tuple[int, ...] = ()
    anchors: tuple[int | None, ...] = field(default=())

    def order(self, k: int) -> int:
        t = half_floor(k)
        if self.tag == "G2":
            return t + self.b_size + self.c_size
        if self.tag == "G3":
            return t + self.b_size + sum(self.stars)
        if self.tag == "G4":
            return 3 + sum(self.stars)
        raise GClassSpecError("tag", f"order is fixed by n for {self.tag}")


def _anchor_list(spec: GClassSpec, choices: int) -> list[int | None]:
    if len(spec.anchors) > len(spec.stars):
        raise GClassSpecError("anchors", "more anchors than stars")
    padded = list(spec.anchors) + [None] * (len(spec.stars) - len(spec.anchors))
    out = []
    for size, anc in zip(spec.stars, padded):
        if size >= 3:
            anc = 0 if anc is None else anc
            if not 0 <= anc < choices:
                raise GClassSpecError("anchor-range", f"anchor {anc} outside 0..{choices - 1}")
        out.append(anc)
    return out


def _attach_stars(edges, start, stars, anchors, anchor_pool, centre_pool):
    """Stars on consecutive vertices from ``start``; returns the next free index."""
    v = start
    for size, anc in zip(stars, anchors):
        centre = v
        members = range(v, v + size)
        for leaf in members[1:]:
            edges.append((centre, leaf))
        if size <= 2:
            for x in members:
                edges.extend((x, a) for a in centre_pool)
        else:
            edges.extend((centre, a) for a in centre_pool)
            for leaf in members[1:]:
                edges.append((leaf, anchor_pool[anc]))
        v += size
    return v


def build_class_member(spec: GClassSpec, n: int, k: int) -> Graph:
    """Emit the (edge-maximal) member of the requested class."""
    if spec.tag not in CLASS_TAGS:
        raise GClassSpecError("tag", f"unknown class tag {spec.tag!r}")
    t = half_floor(k)
    if spec.tag == "G1t":
        return build_H(n, k, t)[0]
    if spec.tag == "G1two":
        return build_H(n, k, 2)[0]
    if k < 9 or t < 4:
        raise GClassSpecError("k-range", f"classes G2-G4 need k >= 9, got {k}")
    if spec.tag in ("G2", "G3") and k % 2:
        # for odd k the bipartite part already closes a k-cycle
        raise GClassSpecError("k-parity", f"{spec.tag}(n, k) is only defined for even k, got {k}")
    if spec.order(k) != n:
        raise GClassSpecError("order", f"part sizes sum to {spec.order(k)}, not n={n}")

    if spec.tag == "G2":
        if spec.b_size < 1:
            raise GClassSpecError("g2-b", "G2 needs b1, so |B| >= 1")
        if spec.c_size < 1:
            raise GClassSpecError("g2-c", "G2 needs a nonempty C")
        A = list(range(t))
        B = list(range(t, t + spec.b_size))
        C = list(range(t + spec.b_size, n))
        edges = list(combinations(A, 2)) + [(x, y) for x in A for y in B]
        a1, b1 = A[0], B[0]
        for c in C:
            edges += [(c, a1), (c, b1)]
        return Graph.from_edges(n, edges)

    if spec.tag == "G3":
        if len(spec.stars) < 2:
            raise GClassSpecError("g3-components", "G[J] must have more than one component")
        if any(s < 2 for s in spec.stars):
            raise GClassSpecError("g3-star-size", "every star of G[J] needs at least two vertices")
        anchors = _anchor_list(spec, 2)
        A = list(range(t))
        B = list(range(t, t + spec.b_size))
        edges = list(combinations(A, 2)) + [(x, y) for x in A for y in B]
        a_prime = A[:2]
        _attach_stars(edges, t + spec.b_size, spec.stars, anchors, a_prime, a_prime)
        return Graph.from_edges(n, edges)

    # G4
    if k != 10:
        raise GClassSpecError("g4-k", "G4(n, k) is empty unless k = 10")
    if any(s < 1 for s in spec.stars):
        raise GClassSpecError("g4-star-size", "star sizes must be positive")
    anchors = _anchor_list(spec, 3)
    A = [0, 1, 2]
    edges = list(combinations(A, 2))
    _attach_stars(edges, 3, spec.stars, anchors, A, A)
    return Graph.from_edges(n, edges)


# -- the dense families F0..F4 -----------------------------------------------

F_TAGS = ("F0", "F1", "F2", "F3", "F4", "F4prime")


def f_family_sizes(tag: str, t: int) -> tuple[int, int]:
    """``(|A|, |B|)`` of the bipartite core of a family member."""
    return {
        "F0": (t, t + 1),
        "F1": (t, t + 2),
        "F2": (t, t + 2),
        "F3": (t, t),
        "F4": (3, 6),
        "F4prime": (4, 4),
    }[tag]


def max_deletions(tag: str, t: int) -> int:
    if tag == "F0":
        return t - 3
    if tag in ("F1", "F2", "F3"):
        return t - 4
    return 0


def build_F_member(tag: str, t: int, deletions=()) -> Graph:
    """Family member with the given ``A x B`` edges removed.

    ``A`` occupies ``0..|A|-1`` and ``B`` the next ``|B|`` indices; ``c1``
    (and ``c2``) come last. In ``F2`` the subdivided pair is ``a1b1 = (0, |A|)``.
    """
    if tag not in F_TAGS:
        raise PreconditionError(f"unknown family tag {tag!r}")
    if tag in ("F4", "F4prime") and t != 4:
        raise PreconditionError(f"{tag} is defined only for t = 4")
    if t < 4 and tag != "F0":
        raise PreconditionError(f"{tag} needs t >= 4")
    if t < 3:
        raise PreconditionError("F0 needs t >= 3")
    deletions = [tuple(sorted(e)) for e in deletions]
    if len(set(deletions)) != len(deletions):
        raise PreconditionError("repeated deletion")
    limit = max_deletions(tag, t)
    if len(deletions) > limit:
        raise PreconditionError(f"{tag} allows at most {limit} deleted edges, got {len(deletions)}")
    na, nb = f_family_sizes(tag, t)
    A = list(range(na))
    B = list(range(na, na + nb))
    core = {(a, b) for a in A for b in B}
    for e in deletions:
        if e not in core:
            raise PreconditionError(f"deleted pair {e} is not an A-B edge")
        core.discard(e)
    extra = []
    n = na + nb
    if tag == "F2":
        a1, b1 = A[0], B[0]
        if (a1, b1) not in core:
            raise PreconditionError("the subdivided edge a1b1 cannot also be deleted")
        core.discard((a1, b1))
        c1 = n
        n += 1
        extra = [(a1, c1), (b1, c1)]
    elif tag == "F3":
        c1, c2 = n, n + 1
        n += 2
        extra = [(c1, c2), (c1, A[0]), (c1, A[1]), (c2, A[2]), (c2, A[3])]
    elif tag == "F4":
        extra = [(B[0], B[1]), (B[2], B[3]), (B[4], B[5])]
    elif tag == "F4prime":
        c1, c2 = n, n + 1
        n += 2
        extra = [(c1, c2)] + [(c, a) for c in (c1, c2) for a in A[:3]]
    return Graph.from_edges(n, sorted(core) + extra)
