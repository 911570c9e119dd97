"""Closed-form edge bounds for graphs without long cycles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import PreconditionError


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    k: int
    a: int

    def __post_init__(self):
        validate_params(self.n, self.k, self.a, construction=True)

    @property
    def t(self) -> int:
        return half_floor(self.k)


def half_floor(k: int) -> int:
    """``t = floor((k-1)/2)``."""
    return (k - 1) // 2


def validate_params(n: int, k: int, a: int, *, construction: bool = False) -> None:
    if k < 3:
        raise PreconditionError(f"k must be at least 3, got {k}")
    if not (1 <= a and 2 * a < k):
        raise PreconditionError(f"need 1 <= a < k/2, got a={a}, k={k}")
    if construction and n < k:
        raise PreconditionError(f"need n >= k, got n={n}, k={k}")
    if n - k + a < 0:
        raise PreconditionError(f"part B would have negative size for n={n}, k={k}, a={a}")


def h(n: int, k: int, a: int) -> int:
    """Edge count of the split construction: ``C(k-a, 2) + a(n-k+a)``.

    Any ``n`` with a non-negative part ``B`` is accepted, so the formula can
    also be evaluated just below ``n = k``.
    """
    validate_params(n, k, a)
    return comb(k - a, 2) + a * (n - k + a)


def stability_bound(n: int, k: int) -> int:
    if k < 9 or n < k:
        raise PreconditionError(f"stability bound needs k >= 9 and n >= k, got n={n}, k={k}")
    t = half_floor(k)
    return max(h(n, k, t - 1), h(n, k, 3))


def kopylov_bound(n: int, k: int) -> int:
    if k < 5 or n < k:
        raise PreconditionError(f"need n >= k >= 5, got n={n}, k={k}")
    t = half_floor(k)
    return max(h(n, k, 2), h(n, k, t))


def erdos_gallai_cycle_bound(n: int, k: int) -> Fraction:
    """``(k-1)(n-1)/2`` for graphs with no cycle of length at least ``k``."""
    if k < 3 or n < 3:
        raise PreconditionError("need n, k >= 3")
    return Fraction((k - 1) * (n - 1), 2)


def erdos_gallai_path_bound(n: int, k: int) -> Fraction:
    """``(k-2)n/2`` for graphs with no path on ``k`` vertices."""
    if k < 2 or n < 2:
        raise PreconditionError("need n, k >= 2")
    return Fraction((k - 2) * n, 2)


def h_difference_check(n: int, k: int) -> int:
    """``h(n,k,t) - h(n,k,t-1)``; equals ``n-t-3`` for odd ``k``, ``n-t-5`` for even ``k``."""
    if k < 9:
        raise PreconditionError(f"need k >= 9, got {k}")
    t = half_floor(k)
    return h(n, k, t) - h(n, k, t - 1)


def h_difference_closed_form(n: int, k: int) -> int:
    t = half_floor(k)
    return n - t - 3 if k == 2 * t + 1 else n - t - 5


@dataclass(frozen=True)
class Crossover:
    """Claimed thresholds: ``h(n,k,a) >= h(n,k,t-1)`` iff ``n <= threshold``."""

    t: int
    k: int
    h3_threshold: Fraction
    h2_threshold: Fraction


def crossover_table(t: int) -> tuple[Crossover, Crossover]:
    if t < 4:
        raise PreconditionError(f"the crossover table is stated for t >= 4, got {t}")
    odd = Crossover(t, 2 * t + 1,
                    2 * t + 1 + Fraction(t - 5, 2),
                    2 * t + 1 + Fraction(t, 2) - 1)
    even = Crossover(t, 2 * t + 2,
                     2 * t + 2 + Fraction(t - 3, 2),
                     2 * t + 2 + Fraction(t, 2))
    return odd, even


@dataclass(frozen=True)
class CrossoverPoint:
    k: int
    n: int
    a: int  # 3 or 2
    claimed: bool
    actual: bool
    lhs: int
    rhs: int

    @property
    def agrees(self) -> bool:
        return self.claimed == self.actual

    @property
    def boundary_equality(self) -> bool:
        return self.lhs == self.rhs


def crossover_points(t: int, span: int | None = None) -> list[CrossoverPoint]:
    """Evaluate every claimed biconditional at each integer ``n`` in ``[k, k+span]``.

    ``span`` defaults to ``t + 3``.
    """
    span = t + 3 if span is None else span
    out = []
    for row in crossover_table(t):
        k = row.k
        for n in range(k, k + span + 1):
            base = h(n, k, t - 1)
            for a, thr in ((3, row.h3_threshold), (2, row.h2_threshold)):
                lhs = h(n, k, a)
                out.append(CrossoverPoint(k, n, a, n <= thr, lhs >= base, lhs, base))
    return out
