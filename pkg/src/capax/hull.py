"""Exact convex-hull membership over the rationals.

Point-in-hull is decided by phase-1 simplex on the feasibility problem

    sum_i lambda_i * q_i = p,   sum_i lambda_i = 1,   lambda_i >= 0,

carried out entirely in Fraction arithmetic with Bland's anti-cycling rule,
so the answer is exact and deterministic.  Problem sizes here are tiny
(dimension + 1 rows, one column per candidate vertex).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _phase_one_feasible(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Feasibility of A x = b, x >= 0 via phase-1 simplex (Bland's rule)."""
    n = len(rows)
    m = len(rows[0]) if n else 0

    tableau = [list(row) for row in rows]
    b = list(rhs)
    for i in range(n):
        if b[i] < 0:
            tableau[i] = [-x for x in tableau[i]]
            b[i] = -b[i]

    # Columns m..m+n-1 are artificial; initial basis is the artificial identity.
    for i in range(n):
        tableau[i].extend(_ONE if j == i else _ZERO for j in range(n))
    basis = [m + i for i in range(n)]
    total_cols = m + n

    def reduced_cost(j: int) -> Fraction:
        # Phase-1 costs: 1 on artificials, 0 otherwise.
        cost = _ONE if j >= m else _ZERO
        acc = cost
        for i in range(n):
            if basis[i] >= m and tableau[i][j]:
                acc -= tableau[i][j]
        return acc

    while True:
        entering = -1
        for j in range(total_cols):
            if reduced_cost(j) < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best_ratio: Fraction | None = None
        for i in range(n):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = b[i] / coeff
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leaving])):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            # Phase-1 objective is bounded below by 0; unreachable.
            raise RuntimeError("phase-1 simplex reported an unbounded ray")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [x / pivot for x in tableau[leaving]]
        b[leaving] = b[leaving] / pivot
        for i in range(n):
            if i == leaving:
                continue
            factor = tableau[i][entering]
            if factor:
                row_l = tableau[leaving]
                tableau[i] = [x - factor * y for x, y in zip(tableau[i], row_l)]
                b[i] -= factor * b[leaving]
        basis[leaving] = entering

    objective = sum((b[i] for i in range(n) if basis[i] >= m), _ZERO)
    return objective == 0


def point_in_hull(point: Sequence[Fraction], vertices: Sequence[Vector]) -> bool:
    """Exact test: is `point` in the convex hull of `vertices`?"""
    if not vertices:
        return False
    d = len(point)
    rows = [[Fraction(v[i]) for v in vertices] for i in range(d)]
    rows.append([_ONE] * len(vertices))
    rhs = [Fraction(x) for x in point] + [_ONE]
    return _phase_one_feasible(rows, rhs)


def extreme_points(points: Sequence[Vector]) -> tuple[Vector, ...]:
    """Deduplicate and keep only the points not in the hull of the others."""
    unique = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    keep = []
    for i, p in enumerate(unique):
        others = unique[:i] + unique[i + 1:]
        if not point_in_hull(p, others):
            keep.append(p)
    return tuple(keep)
