"""Lattice-corner combinatorics of saturated sets in the nonpositive orthant.

A compact set C in (-inf, 0]^d that is saturated (stable under moving
coordinates toward 0, C = (C + [0, inf)^d) cap (-inf, 0]^d) is encoded here
either as a finite union of axis-aligned boxes or as a polar slice.  The
associated lattice data is

    J_C  = {v in Z^d_{>=0} : C meets the half-open cell prod (-v_i-1, -v_i]}
         = {v : -v in C}                      (the two agree once saturated),
    dJ_C = {v in J_C : v + e_i not in J_C for all i},
    I_C  = max over J_C of sum v_i,

and the corner lemma states that dJ_C is the singleton {v} exactly when
prod [-v_i, 0] is contained in C and C is contained in prod (-v_i-1, 0].
All tests are exact rational arithmetic.

Saturation makes a box union a union of boxes anchored at the origin, which
also forces star-shapedness about the origin; for raw inputs the star-shape
precondition is checked by joining each box's max corner to the origin and
verifying the segment is covered, which is an exact interval-cover test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidInputError,
    NotSaturatedError,
    NotStarShapedError,
    UnboundedDomainError,
    UnboundedError,
)
from .rationals import RationalLike, to_fraction
from .toric import PolarSlice

Interval = tuple[Fraction, Fraction]
Box = tuple[Interval, ...]
LatticeVector = tuple[int, ...]


@dataclass(frozen=True)
class CornerData:
    """J, dJ and I_C of a saturated set, plus enough geometry to re-verify
    the corner lemma (min_corner holds the coordinatewise minimum of C)."""

    dimension: int
    J: tuple[LatticeVector, ...]
    boundary_J: tuple[LatticeVector, ...]
    I_C: int
    min_corner: tuple[Fraction, ...]
    boxes: Optional[tuple[Box, ...]] = None
    source: str = ""


# ---------------------------------------------------------------------------
# box unions
# ---------------------------------------------------------------------------

def _parse_boxes(raw_boxes: Iterable[Sequence[Sequence[RationalLike]]]
                 ) -> tuple[Box, ...]:
    boxes = []
    try:
        for raw in raw_boxes:
            box = tuple((to_fraction(pair[0]), to_fraction(pair[1]))
                        for pair in raw)
            boxes.append(box)
    except UnboundedDomainError as exc:
        raise UnboundedError(str(exc)) from exc
    if not boxes:
        raise InvalidInputError("box union needs at least one box")
    d = len(boxes[0])
    if d < 1:
        raise InvalidInputError("box union needs dimension >= 1")
    for box in boxes:
        if len(box) != d:
            raise InvalidInputError("boxes of mixed dimension")
        for lo, hi in box:
            if lo > hi:
                raise InvalidInputError(f"empty interval [{lo}, {hi}]")
            if hi > 0:
                raise InvalidInputError(
                    f"box leaves the nonpositive orthant (upper bound {hi} > 0)")
    return tuple(boxes)


def _point_in_union(point: Sequence[Fraction], boxes: Sequence[Box]) -> bool:
    return any(all(lo <= x <= hi for x, (lo, hi) in zip(point, box))
               for box in boxes)


def _segment_to_origin_covered(corner: Sequence[Fraction],
                               boxes: Sequence[Box]) -> bool:
    """Is {s * corner : s in [0, 1]} covered by the box union?  Exact
    interval-cover sweep over the per-box parameter ranges."""
    intervals: list[Interval] = []
    for box in boxes:
        lo_s, hi_s = Fraction(0), Fraction(1)
        empty = False
        for c, (lo, hi) in zip(corner, box):
            if c == 0:
                if lo > 0 or hi < 0:
                    empty = True
                    break
            else:  # c < 0: lo <= s*c <= hi flips under division
                lo_s = max(lo_s, hi / c)
                hi_s = min(hi_s, lo / c)
                if lo_s > hi_s:
                    empty = True
                    break
        if not empty:
            intervals.append((lo_s, hi_s))
    covered = Fraction(0)
    for a, b in sorted(intervals):
        if a > covered:
            return False
        covered = max(covered, b)
    return covered >= 1


def saturate_boxes(boxes: Sequence[Box]) -> tuple[Box, ...]:
    """Saturation of a box union: anchor every box at the origin."""
    return tuple(
        tuple((lo, Fraction(0)) for lo, _ in box) for box in boxes)


def _axis_cuts(values: set[Fraction], lo: Fraction, hi: Fraction
               ) -> list[Fraction]:
    cuts = sorted(v for v in values if lo <= v <= hi)
    if not cuts or cuts[0] != lo:
        cuts.insert(0, lo)
    if cuts[-1] != hi:
        cuts.append(hi)
    return cuts


def union_contains_box(target: Box, boxes: Sequence[Box]) -> bool:
    """Exact containment of a closed box in a finite union of closed boxes.

    Fast path: containment in a single member.  Otherwise decompose the
    target along every coordinate cut of the arrangement; each elementary
    cell (singleton or open interval per axis) lies inside or outside each
    member as a whole, so coverage is a finite check.
    """
    for box in boxes:
        if all(blo <= tlo and thi <= bhi
               for (tlo, thi), (blo, bhi) in zip(target, box)):
            return True
    d = len(target)
    axis_pieces = []
    for i in range(d):
        tlo, thi = target[i]
        values = {tlo, thi}
        for box in boxes:
            values.add(box[i][0])
            values.add(box[i][1])
        cuts = _axis_cuts(values, tlo, thi)
        pieces: list[Interval | Fraction] = [cuts[0]]
        for a, b in itertools.pairwise(cuts):
            pieces.append((a, b))  # the open interval (a, b)
            pieces.append(b)
        axis_pieces.append(pieces)

    def piece_inside(piece, lo: Fraction, hi: Fraction) -> bool:
        if isinstance(piece, tuple):
            a, b = piece
            return lo <= a and b <= hi
        return lo <= piece <= hi

    for cell in itertools.product(*axis_pieces):
        if not any(
                all(piece_inside(piece, *box[i])
                    for i, piece in enumerate(cell))
                for box in boxes):
            return False
    return True


def corner_analysis(raw_boxes: Iterable[Sequence[Sequence[RationalLike]]],
                    saturate: bool = False) -> CornerData:
    """Exact J, dJ, I_C of a box union.

    The union must be star-shaped about the origin (each box's max corner
    joins to the origin inside the union) and saturated; with
    saturate=True the saturation is applied instead of verified.
    """
    boxes = _parse_boxes(raw_boxes)
    for box in boxes:
        corner = tuple(hi for _, hi in box)
        if not _segment_to_origin_covered(corner, boxes):
            raise NotStarShapedError(
                f"segment from box corner {corner} to the origin leaves the union")
    saturated = saturate_boxes(boxes)
    if not saturate:
        for anchored in saturated:
            if not union_contains_box(anchored, boxes):
                raise NotSaturatedError(
                    "box union is not saturated; pass saturate=True to "
                    "saturate it on input")
    d = len(boxes[0])
    min_corner = tuple(min(box[i][0] for box in saturated) for i in range(d))
    grid = [range(0, math.floor(-m) + 1) for m in min_corner]
    members = [
        v for v in itertools.product(*grid)
        if _point_in_union(tuple(Fraction(-x) for x in v), saturated)
    ]
    return _assemble(d, members, min_corner, saturated,
                     f"box union ({len(boxes)} boxes)")


# ---------------------------------------------------------------------------
# polar slices
# ---------------------------------------------------------------------------

def corner_data_from_slice(slice_: PolarSlice) -> CornerData:
    """Lattice corners of a polar slice (it is compact and saturated)."""
    d = slice_.domain.dimension
    t = slice_.T
    scale = slice_.domain._int_scale * t.denominator
    bound = t.numerator * slice_.domain._int_scale
    vertices = [tuple(wi * t.denominator for wi in w)
                for w in slice_.domain._int_vertices if any(w)]
    grid = [range(0, math.floor(b) + 1) for b in slice_.box_bound]
    members = []
    for v in itertools.product(*grid):
        if all(sum(x * wi for x, wi in zip(v, w) if wi) <= bound
               for w in vertices):
            members.append(v)
    min_corner = tuple(-b for b in slice_.box_bound)
    return _assemble(d, members, min_corner, None,
                     f"polar slice at T={t}")


# ---------------------------------------------------------------------------
# shared assembly and the corner lemma
# ---------------------------------------------------------------------------

def _assemble(d: int, members: list[LatticeVector],
              min_corner: tuple[Fraction, ...],
              boxes: Optional[tuple[Box, ...]], source: str) -> CornerData:
    member_set = set(members)
    if not member_set:
        raise UnboundedError("saturated set does not contain the origin")
    unit = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    boundary = sorted(
        v for v in member_set
        if all(tuple(x + e for x, e in zip(v, ei)) not in member_set
               for ei in unit))
    i_c = max(sum(v) for v in boundary)
    return CornerData(d, tuple(sorted(member_set)), tuple(boundary), i_c,
                      min_corner, boxes, source)


def corner_lemma_check(data: CornerData) -> bool:
    """Verify the corner-lemma biconditional on this set.

    dJ_C = {v} must hold exactly when [-v, 0] subset C subset prod
    (-v_i - 1, 0].  Here [-v, 0] subset C reduces to v in J (C is
    saturated) and the outer inclusion to min_corner_i > -v_i - 1.  Always
    true for valid data; exposed as a self-test.
    """
    def right_side(v: LatticeVector) -> bool:
        return (v in data.J
                and all(m > -x - 1 for m, x in zip(data.min_corner, v)))

    if len(data.boundary_J) == 1:
        return right_side(data.boundary_J[0])
    # Both inclusions force v to dominate all of J and belong to it, so the
    # componentwise maximum of J is the only possible witness.
    vmax = tuple(max(v[i] for v in data.J) for i in range(data.dimension))
    return not right_side(vmax)
