"""Shared deterministic generators for the test suite.

Everything is seeded `random.Random`, no global state; the polytope
generator produces genuinely random convex downward-closed rational bodies
by taking random seed points, closing them under coordinate zeroing (which
makes the hull downward closed), and keeping the extreme points.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from capax import hull, toric


def random_fraction(rng: random.Random, lo: int = 0, hi: int = 6,
                    denominators=(1, 2, 3, 4), positive: bool = False) -> Fraction:
    den = rng.choice(denominators)
    low = lo * den + (1 if positive else 0)
    return Fraction(rng.randint(low, hi * den), den)


def random_params(rng: random.Random, d: int, hi: int = 6) -> list[Fraction]:
    return sorted(random_fraction(rng, 0, hi, positive=True) for _ in range(d))


def random_shaped_domain(rng: random.Random, d: int) -> toric.ToricDomain:
    kind = rng.choice(("ball", "ellipsoid", "polydisk"))
    if kind == "ball":
        return toric.ball(random_fraction(rng, 0, 6, positive=True), d)
    params = random_params(rng, d)
    return toric.ellipsoid(params) if kind == "ellipsoid" else toric.polydisk(params)


def random_downward_polytope(rng: random.Random, d: int,
                             max_vertices: int = 8) -> toric.ToricDomain:
    """Random convex downward-closed polytope with <= max_vertices vertices
    and positive extent in every coordinate."""
    while True:
        seeds = []
        first = tuple(random_fraction(rng, 0, 5, positive=True) for _ in range(d))
        seeds.append(first)
        for _ in range(rng.randint(0, 2)):
            seeds.append(tuple(random_fraction(rng, 0, 5) for _ in range(d)))
        closed = set()
        for p in seeds:
            for mask in itertools.product((0, 1), repeat=d):
                closed.add(tuple(x if m else Fraction(0)
                                 for x, m in zip(p, mask)))
        # Zero-closure makes the hull downward closed; keep its vertices.
        vertices = hull.extreme_points(sorted(closed))
        if len(vertices) > max_vertices:
            continue
        domain = toric.polytope(vertices)
        if all(e > 0 for e in domain.extents):
            return domain


def random_saturated_box_union(rng: random.Random, d: int,
                               max_boxes: int = 4):
    """Random saturated box union in (-inf, 0]^d as raw [[lo, hi], ...] data."""
    boxes = []
    for _ in range(rng.randint(1, max_boxes)):
        lows = [-random_fraction(rng, 0, 4, positive=True) for _ in range(d)]
        boxes.append([[lo, Fraction(0)] for lo in lows])
    return boxes


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
