import random
from fractions import Fraction

from capax.hull import extreme_points, point_in_hull


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _in_triangle(p, a, b, c):
    """2D orientation oracle, independent of the simplex implementation."""
    d1 = _cross(a, b, p)
    d2 = _cross(b, c, p)
    d3 = _cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def test_point_in_hull_matches_orientation_oracle():
    rng = random.Random(7)
    tri = [(Fraction(0), Fraction(0)), (Fraction(4), Fraction(0)),
           (Fraction(1), Fraction(3))]
    for _ in range(200):
        p = (Fraction(rng.randint(-2, 6), rng.choice((1, 2, 3))),
             Fraction(rng.randint(-2, 6), rng.choice((1, 2, 3))))
        assert point_in_hull(p, tri) == _in_triangle(p, *tri)


def test_point_in_hull_boundary_and_degenerate():
    seg = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(2))]
    assert point_in_hull((Fraction(1), Fraction(1)), seg)
    assert not point_in_hull((Fraction(1), Fraction(0)), seg)
    assert point_in_hull((Fraction(2), Fraction(2)), seg)
    assert point_in_hull((Fraction(3),), [(Fraction(1),), (Fraction(4),)])


def test_extreme_points_drops_interior_and_duplicates():
    pts = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)),
           (Fraction(0), Fraction(2)), (Fraction(1), Fraction(1)),
           (Fraction(2), Fraction(0))]
    kept = extreme_points(pts)
    assert (Fraction(1), Fraction(1)) not in kept
    assert len(kept) == 3


def test_extreme_points_keeps_true_corners():
    square = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
              (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))]
    assert set(extreme_points(square)) == set(square)
