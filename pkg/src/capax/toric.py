"""Exact rational geometry of moment bodies of convex toric domains.

A toric domain is determined by its moment body Omega in the nonnegative
orthant.  Everything here works with the *closure* of Omega represented by
its canonical vertices, so support values, polar slices and lattice maxima
are all exact rational quantities:

* ellipsoids are stored as their moment simplex {0, a_1 e_1, ..., a_d e_d};
* polydisks as the 2^d corners of the box prod [0, a_i];
* general bodies as validated convex, downward-closed rational polytopes.

The polar slice at level T is the compact polytope

    {z <= 0 : <-z, w> <= T for every canonical vertex w},

i.e. the saturated representative of {z : T + <z, zeta> >= 0 for zeta in
Omega}, fixed once and for all in the nonpositive orthant.

All types are immutable and all operations are pure functions, so the module
is safe to use from multiple threads.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import hull
from .errors import (
    DegenerateExtentError,
    DimensionMismatchError,
    EmptyDomainError,
    EmptySliceError,
    InvalidInputError,
    NegativeActionValueError,
    NegativeDirectionError,
    NegativeTError,
    NegativeVertexCoordinateError,
    NonPositiveParameterError,
    NonPositiveScaleError,
    NotConvexError,
    NotDownwardClosedError,
)
from .rationals import (
    RationalLike,
    format_rational,
    format_vector,
    to_fraction,
    to_fraction_vector,
)

Vector = tuple[Fraction, ...]

ELLIPSOID = "ellipsoid"
POLYDISK = "polydisk"
BALL = "ball"
POLYTOPE = "polytope"

_SHAPES = (ELLIPSOID, POLYDISK, BALL, POLYTOPE)


@dataclass(frozen=True)
class ToricDomain:
    """Validated, canonicalized moment body.

    `params` holds the sorted shape parameters for ellipsoid/polydisk/ball
    (empty for polytopes) and `input_order` the permutation applied by the
    sort: params[i] was originally params_in[input_order[i]].
    """

    dimension: int
    shape: str
    params: tuple[Fraction, ...]
    vertices: tuple[Vector, ...]
    input_order: tuple[int, ...] = ()
    extents: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)
    _int_vertices: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False)
    _int_scale: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        d = self.dimension
        extents = tuple(
            max(w[i] for w in self.vertices) for i in range(d))
        scale = 1
        for w in self.vertices:
            for x in w:
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        int_vertices = tuple(
            tuple(int(x * scale) for x in w) for w in self.vertices)
        object.__setattr__(self, "extents", extents)
        object.__setattr__(self, "_int_vertices", int_vertices)
        object.__setattr__(self, "_int_scale", scale)

    def describe(self) -> str:
        if self.shape == BALL:
            return f"ball r={format_rational(self.params[0])} d={self.dimension}"
        if self.shape in (ELLIPSOID, POLYDISK):
            inner = ", ".join(format_rational(a) for a in self.params)
            return f"{self.shape} a=({inner})"
        verts = " ".join(format_vector(w) for w in self.vertices)
        return f"polytope vertices {verts}"


@dataclass(frozen=True)
class PolarSlice:
    """The slice Omega^o_T with exact membership test and box bound."""

    domain: ToricDomain
    T: Fraction
    box_bound: tuple[Fraction, ...]

    def contains(self, z: Sequence[Fraction]) -> bool:
        if len(z) != self.domain.dimension:
            raise DimensionMismatchError(
                f"point of dimension {len(z)} in slice of dimension "
                f"{self.domain.dimension}")
        if any(zi > 0 for zi in z):
            return False
        return all(
            sum(-zi * wi for zi, wi in zip(z, w)) <= self.T
            for w in self.domain.vertices)

    def halfspaces(self) -> tuple[tuple[Vector, Fraction], ...]:
        """Inequalities (n, b) meaning <n, z> <= b describing the slice."""
        d = self.domain.dimension
        zero = Fraction(0)
        one = Fraction(1)
        ineqs = [
            (tuple(one if j == i else zero for j in range(d)), zero)
            for i in range(d)
        ]
        ineqs.extend(
            (tuple(-wi for wi in w), self.T) for w in self.domain.vertices)
        return tuple(ineqs)


# ---------------------------------------------------------------------------
# construction and validation
# ---------------------------------------------------------------------------

def _sorted_params(values: Iterable[RationalLike]) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    raw = to_fraction_vector(values)
    if not raw:
        raise EmptyDomainError("no shape parameters given")
    if any(a <= 0 for a in raw):
        raise NonPositiveParameterError(f"parameters must be positive, got {raw}")
    order = tuple(sorted(range(len(raw)), key=lambda i: (raw[i], i)))
    return tuple(raw[i] for i in order), order


def ellipsoid(a: Iterable[RationalLike]) -> ToricDomain:
    """E(a_1, ..., a_d): moment body is the simplex {0, a_i e_i}."""
    params, order = _sorted_params(a)
    d = len(params)
    zero = Fraction(0)
    vertices = [tuple(zero for _ in range(d))]
    for i, ai in enumerate(params):
        vertices.append(tuple(ai if j == i else zero for j in range(d)))
    return ToricDomain(d, ELLIPSOID, params, tuple(vertices), order)


def polydisk(a: Iterable[RationalLike]) -> ToricDomain:
    """D(a_1, ..., a_d): moment body is the box prod [0, a_i]."""
    params, order = _sorted_params(a)
    d = len(params)
    zero = Fraction(0)
    vertices = tuple(
        tuple(params[i] if bit else zero for i, bit in enumerate(bits))
        for bits in itertools.product((0, 1), repeat=d))
    return ToricDomain(d, POLYDISK, params, vertices, order)


def ball(r: RationalLike, dimension: int) -> ToricDomain:
    """B_a in dimension d: the ellipsoid with all a_i = a."""
    if dimension < 1:
        raise EmptyDomainError(f"dimension must be >= 1, got {dimension}")
    a = to_fraction(r)
    if a <= 0:
        raise NonPositiveParameterError(f"ball parameter must be positive, got {a}")
    base = ellipsoid([a] * dimension)
    return ToricDomain(dimension, BALL, base.params, base.vertices,
                       tuple(range(dimension)))


def polytope(vertices: Iterable[Sequence[RationalLike]]) -> ToricDomain:
    """Validated convex, downward-closed rational polytope in R^d_{>=0}."""
    raw = [to_fraction_vector(v) for v in vertices]
    if not raw:
        raise EmptyDomainError("polytope needs at least one vertex")
    d = len(raw[0])
    if d < 1:
        raise EmptyDomainError("dimension must be >= 1")
    if any(len(v) != d for v in raw):
        raise DimensionMismatchError("vertices of mixed dimension")
    for v in raw:
        if any(x < 0 for x in v):
            raise NegativeVertexCoordinateError(f"vertex {v} outside R^d_(>=0)")

    unique = sorted(set(raw))
    extremes = set(hull.extreme_points(unique))
    redundant = [v for v in unique if v not in extremes]
    if redundant:
        raise NotConvexError(
            f"vertex list is not its own convex hull: {redundant[0]} lies in "
            f"the hull of the other vertices")

    verts = tuple(sorted(extremes))
    # Downward closure: zeroing any single coordinate of a vertex must stay
    # in the body; by convexity this certifies closure under all of [0, x].
    for v in verts:
        for i in range(d):
            if v[i] == 0:
                continue
            projected = tuple(Fraction(0) if j == i else x
                              for j, x in enumerate(v))
            if not hull.point_in_hull(projected, verts):
                raise NotDownwardClosedError(
                    f"projection {projected} of vertex {v} is outside the body")
    return ToricDomain(d, POLYTOPE, (), verts)


def validate_domain(spec: dict) -> ToricDomain:
    """Build a ToricDomain from a parsed JSON spec dict.

    Schema: {"type": "ellipsoid"|"polydisk"|"ball"|"polytope",
             "a": [rational, ...]          for ellipsoid/polydisk,
             "r": rational, "d": int       for ball,
             "vertices": [[rational, ...]] for polytope}
    Rationals may be integers, "p/q" strings or exact decimal literals.
    """
    if not isinstance(spec, dict):
        raise InvalidInputError("domain spec must be a JSON object")
    kind = spec.get("type")
    if kind not in _SHAPES:
        raise InvalidInputError(
            f"unknown domain type {kind!r}; expected one of {_SHAPES}")
    if kind == ELLIPSOID or kind == POLYDISK:
        if "a" not in spec:
            raise InvalidInputError(f"{kind} spec requires field 'a'")
        maker = ellipsoid if kind == ELLIPSOID else polydisk
        return maker(spec["a"])
    if kind == BALL:
        if "r" not in spec or "d" not in spec:
            raise InvalidInputError("ball spec requires fields 'r' and 'd'")
        try:
            dimension = int(spec["d"])
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad ball dimension {spec['d']!r}") from exc
        return ball(spec["r"], dimension)
    if "vertices" not in spec:
        raise InvalidInputError("polytope spec requires field 'vertices'")
    return polytope(spec["vertices"])


def domain_to_spec(domain: ToricDomain) -> dict:
    """Inverse of validate_domain, with rationals as canonical strings."""
    if domain.shape == BALL:
        return {"type": BALL, "r": str(domain.params[0]), "d": domain.dimension}
    if domain.shape in (ELLIPSOID, POLYDISK):
        return {"type": domain.shape, "a": [str(a) for a in domain.params]}
    return {"type": POLYTOPE,
            "vertices": [[str(x) for x in w] for w in domain.vertices]}


# ---------------------------------------------------------------------------
# moment map and membership
# ---------------------------------------------------------------------------

def moment_map(action_values: Iterable[RationalLike]) -> Vector:
    """Identity on action coordinates (pi |u_i|^2), validated nonnegative."""
    values = to_fraction_vector(action_values)
    for x in values:
        if x < 0:
            raise NegativeActionValueError(f"action value {x} is negative")
    return values


def contains_point(domain: ToricDomain, zeta: Sequence[Fraction]) -> bool:
    """Exact membership of a point in the closure of the moment body."""
    if len(zeta) != domain.dimension:
        raise DimensionMismatchError(
            f"point of dimension {len(zeta)}, domain of dimension "
            f"{domain.dimension}")
    if any(x < 0 for x in zeta):
        return False
    if domain.shape in (ELLIPSOID, BALL):
        return sum(x / a for x, a in zip(zeta, domain.params)) <= 1
    if domain.shape == POLYDISK:
        return all(x <= a for x, a in zip(zeta, domain.params))
    return hull.point_in_hull(tuple(zeta), domain.vertices)


def action_in_domain(domain: ToricDomain, action_values: Iterable[RationalLike]) -> bool:
    """Membership u in X_Omega, tested as mu(u) in closure(Omega)."""
    return contains_point(domain, moment_map(action_values))


# ---------------------------------------------------------------------------
# support function, polar slices, lattice functional
# ---------------------------------------------------------------------------

def support_norm(domain: ToricDomain, v: Sequence[RationalLike]) -> Fraction:
    """||v||*_Omega = max over canonical vertices w of <v, w>, for v >= 0."""
    vec = to_fraction_vector(v)
    if len(vec) != domain.dimension:
        raise DimensionMismatchError(
            f"direction of dimension {len(vec)}, domain of dimension "
            f"{domain.dimension}")
    if any(x < 0 for x in vec):
        raise NegativeDirectionError(f"direction {vec} has a negative entry")
    return max(sum(x * wi for x, wi in zip(vec, w)) for w in domain.vertices)


def _int_support(int_vertices, v: Sequence[int]) -> int:
    """max_w <v, w> against the integer-scaled vertex table."""
    best = None
    for w in int_vertices:
        s = 0
        for x, wi in zip(v, w):
            if wi:
                s += x * wi
        if best is None or s > best:
            best = s
    return best


def polar_slice(domain: ToricDomain, T: RationalLike) -> PolarSlice:
    """The slice Omega^o_T in the nonpositive orthant."""
    t = to_fraction(T)
    if t < 0:
        raise NegativeTError(f"T must be >= 0, got {t}")
    for i, extent in enumerate(domain.extents):
        if extent == 0:
            raise DegenerateExtentError(
                f"moment body is flat in coordinate {i}; the slice is unbounded")
    box = tuple(t / extent for extent in domain.extents)
    return PolarSlice(domain, t, box)


def lattice_functional(z: Sequence[RationalLike]) -> int:
    """I(z) = sum_i floor(-z_i)."""
    return sum(math.floor(-x) for x in to_fraction_vector(z))


def max_lattice_functional(slice_: PolarSlice) -> tuple[int, Vector]:
    """Maximum of I over the slice, with a maximizing point.

    I(z) >= m somewhere on the slice iff some lattice corner -v with
    sum v_i = m lies in the slice (round z down coordinatewise and use that
    the slice is saturated toward the origin), so the maximum is found by a
    bounded search over lattice vectors v with <v, w> <= T for all vertices
    w.  The search is depth-first, descending, with an admissible
    sum-of-axis-caps bound, so it is exact and fast even for large boxes.
    """
    d = slice_.domain.dimension
    if not slice_.contains((Fraction(0),) * d):
        raise EmptySliceError("polar slice does not contain the origin")

    t = slice_.T
    # Scale so every constraint <v, W'> <= bound is pure integer arithmetic.
    scale = slice_.domain._int_scale * t.denominator
    bound = t.numerator * slice_.domain._int_scale
    vertices = [
        tuple(wi * t.denominator for wi in w)
        for w in slice_.domain._int_vertices
        if any(w)
    ]
    if not vertices:
        raise EmptySliceError("moment body has no nonzero vertex")

    def axis_caps(residuals: list[int], start: int) -> list[int]:
        caps = []
        for j in range(start, d):
            cap: Optional[int] = None
            for w, r in zip(vertices, residuals):
                if w[j]:
                    c = r // w[j]
                    if cap is None or c < cap:
                        cap = c
            caps.append(cap if cap is not None else 0)
        return caps

    best = -1
    best_v: list[int] = [0] * d
    chosen = [0] * d

    def search(axis: int, residuals: list[int], acc: int):
        nonlocal best, best_v
        if axis == d:
            if acc > best:
                best = acc
                best_v = chosen.copy()
            return
        caps = axis_caps(residuals, axis)
        tail = sum(caps[1:])
        if acc + caps[0] + tail <= best:
            return
        for val in range(caps[0], -1, -1):
            if acc + val + tail <= best:
                break
            chosen[axis] = val
            if val:
                new_res = [r - val * w[axis] for w, r in zip(vertices, residuals)]
            else:
                new_res = residuals
            search(axis + 1, new_res, acc + val)
        chosen[axis] = 0

    search(0, [bound] * len(vertices), 0)
    witness = tuple(Fraction(-v) for v in best_v)
    return best, witness


def polar_inf_norm(domain: ToricDomain) -> Fraction:
    """||Omega^o_1||_inf = max_i 1/extent_i (attained on a coordinate axis)."""
    for i, extent in enumerate(domain.extents):
        if extent == 0:
            raise DegenerateExtentError(
                f"moment body is flat in coordinate {i}")
    return max(1 / extent for extent in domain.extents)


def scale_domain(domain: ToricDomain, s: RationalLike) -> ToricDomain:
    """Scale the moment body by s > 0 (the r^2-scaling of the domain)."""
    factor = to_fraction(s)
    if factor <= 0:
        raise NonPositiveScaleError(f"scale must be positive, got {factor}")
    if domain.shape == BALL:
        return ball(domain.params[0] * factor, domain.dimension)
    if domain.shape == ELLIPSOID:
        return ellipsoid([a * factor for a in domain.params])
    if domain.shape == POLYDISK:
        return polydisk([a * factor for a in domain.params])
    return polytope([tuple(x * factor for x in w) for w in domain.vertices])
