"""Capacity sequences of convex toric domains, by three routes.

For a convex moment body the k-th capacity admits two equivalent
combinatorial descriptions:

* lattice route: min of the support value ||v||* over lattice vectors
  v >= 0 with sum v_i = k;
* polar route: least T >= 0 whose polar slice contains a point z with
  I(z) >= k, located by scanning the finite set of support values of small
  lattice vectors (the predicate is monotone in T, so the first admissible
  candidate is the answer).

Ellipsoids, balls and polydisks additionally have closed forms.  The three
routes are kept as genuinely independent implementations so they can
cross-check each other; `method="cross-check"` runs the first two and fails
loudly on any disagreement.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import (
    CrossCheckMismatchError,
    DimensionMismatchError,
    InvalidInputError,
    KTooLargeForEnumerationError,
    NotApplicableError,
)
from .rationals import format_rational
from .toric import (
    BALL,
    ELLIPSOID,
    POLYDISK,
    ToricDomain,
    Vector,
    max_lattice_functional,
    polar_slice,
)

DEFAULT_ENUM_BUDGET = 10_000_000

METHOD_LATTICE = "lattice"
METHOD_POLAR = "polar"
METHOD_CLOSED = "closed_form"
METHOD_CROSS_CHECK = "cross-check"
METHOD_AUTO = "auto"

NO_OBSTRUCTION_CAVEAT = (
    "NoObstructionFound is not a proof of embeddability: capacities give "
    "necessary conditions only."
)


@dataclass(frozen=True)
class CapacityEntry:
    k: int
    value: Fraction
    witness_vector: tuple[int, ...]
    witness_T: Fraction


@dataclass(frozen=True)
class CapacityReport:
    domain: ToricDomain
    k_max: int
    method: str
    entries: tuple[CapacityEntry, ...]
    notes: tuple[str, ...] = ()

    def values(self) -> tuple[Fraction, ...]:
        return tuple(e.value for e in self.entries)


@dataclass(frozen=True)
class ObstructionReport:
    source: ToricDomain
    target: ToricDomain
    k_max: int
    comparison: str  # "c_k" or "[c]_k"
    obstructed: bool
    first_k: Optional[int]
    source_value: Optional[Fraction]
    target_value: Optional[Fraction]
    notes: tuple[str, ...]

    @property
    def verdict(self) -> str:
        return "Obstructed" if self.obstructed else "NoObstructionFound"


# ---------------------------------------------------------------------------
# enumeration helpers
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All vectors in N^parts with coordinate sum == total."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _check_budget(count: int, budget: int):
    if count > budget:
        raise KTooLargeForEnumerationError(count, budget)


def _scaled_vertices(domain: ToricDomain) -> tuple[list[tuple[int, ...]], int]:
    """Integer vertex table and the common denominator it was scaled by."""
    return [w for w in domain._int_vertices], domain._int_scale


def _reduce_to_sum(v: Sequence[int], k: int) -> tuple[int, ...]:
    """Decrease coordinates from the last axis until the sum equals k."""
    out = list(v)
    excess = sum(out) - k
    if excess < 0:
        raise InvalidInputError(f"cannot raise {v} to sum {k}")
    for i in range(len(out) - 1, -1, -1):
        if excess == 0:
            break
        drop = min(excess, out[i])
        out[i] -= drop
        excess -= drop
    return tuple(out)


# ---------------------------------------------------------------------------
# the three routes
# ---------------------------------------------------------------------------

def capacity_lattice(domain: ToricDomain, k: int,
                     budget: int = DEFAULT_ENUM_BUDGET
                     ) -> tuple[Fraction, tuple[int, ...]]:
    """Minimize ||v||* over the compositions of k into d nonnegative parts.

    Ties are broken toward the smallest reversed tuple, which makes the
    witness deterministic (e.g. the unit ball in d=2 at k=3 yields (2, 1)).
    """
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    d = domain.dimension
    _check_budget(math.comb(k + d - 1, d - 1), budget)
    vertices, scale = _scaled_vertices(domain)
    best: Optional[int] = None
    best_key: Optional[tuple] = None
    best_v: Optional[tuple[int, ...]] = None
    for v in _compositions(k, d):
        norm = max(sum(x * wi for x, wi in zip(v, w) if wi) for w in vertices)
        key = (norm, v[::-1])
        if best_key is None or key < best_key:
            best, best_key, best_v = norm, key, v
    assert best is not None and best_v is not None
    return Fraction(best, scale), best_v


def capacity_polar(domain: ToricDomain, k: int,
                   budget: int = DEFAULT_ENUM_BUDGET
                   ) -> tuple[Fraction, Vector]:
    """Least T whose polar slice reaches lattice functional k.

    Candidate T values are the support values of all lattice vectors with
    coordinate sum <= k (a finite set that provably contains the answer);
    the admissibility predicate max I(Omega^o_T) >= k is monotone in T, so
    an ascending scan stops at the first admissible candidate.  Returns that
    T and a point z of the slice with I(z) >= k.
    """
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    d = domain.dimension
    _check_budget(math.comb(k + d, d), budget)
    vertices, scale = _scaled_vertices(domain)
    values = set()
    for total in range(k + 1):
        for v in _compositions(total, d):
            values.add(
                max(sum(x * wi for x, wi in zip(v, w) if wi) for w in vertices))
    for raw in sorted(values):
        t = Fraction(raw, scale)
        reached, witness = max_lattice_functional(polar_slice(domain, t))
        if reached >= k:
            return t, witness
    raise InvalidInputError(
        f"no candidate support value reaches I >= {k}; domain degenerate?")


def capacity_closed_form(domain: ToricDomain, k: int) -> Fraction:
    """Closed forms: k-th smallest of {m a_i} for ellipsoids (equivalently
    min T with sum floor(T/a_i) >= k), ceil(k/d) a for balls, k a_1 for
    polydisks.  Raises NotApplicableError for general polytopes."""
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    if domain.shape == BALL:
        return Fraction(math.ceil(Fraction(k, domain.dimension))) * domain.params[0]
    if domain.shape == ELLIPSOID:
        multiples = sorted(m * a for a in domain.params for m in range(1, k + 1))
        return multiples[k - 1]
    if domain.shape == POLYDISK:
        return k * domain.params[0]
    raise NotApplicableError(
        f"no closed form for shape {domain.shape!r}; use lattice or polar")


def _closed_form_witness(domain: ToricDomain, k: int, value: Fraction
                         ) -> tuple[int, ...]:
    if domain.shape == POLYDISK:
        return (k,) + (0,) * (domain.dimension - 1)
    saturated = [math.floor(value / a) for a in domain.params]
    return _reduce_to_sum(saturated, k)


# ---------------------------------------------------------------------------
# sequences, cross checks, obstructions
# ---------------------------------------------------------------------------

def _resolve_method(domain: ToricDomain, method: str) -> str:
    if method == METHOD_AUTO:
        return METHOD_LATTICE if domain.shape == "polytope" else METHOD_CLOSED
    return method


def capacity_value(domain: ToricDomain, k: int, method: str = METHOD_AUTO,
                   budget: int = DEFAULT_ENUM_BUDGET) -> Fraction:
    """Single capacity value by the requested (or fastest applicable) route."""
    method = _resolve_method(domain, method)
    if method == METHOD_CLOSED:
        return capacity_closed_form(domain, k)
    if method == METHOD_LATTICE:
        return capacity_lattice(domain, k, budget)[0]
    if method == METHOD_POLAR:
        return capacity_polar(domain, k, budget)[0]
    raise InvalidInputError(f"unknown method {method!r}")


def _entry(domain: ToricDomain, k: int, method: str, budget: int
           ) -> CapacityEntry:
    if method == METHOD_CLOSED:
        value = capacity_closed_form(domain, k)
        witness = _closed_form_witness(domain, k, value)
    elif method == METHOD_LATTICE:
        value, witness = capacity_lattice(domain, k, budget)
    elif method == METHOD_POLAR:
        value, z = capacity_polar(domain, k, budget)
        witness = _reduce_to_sum([math.floor(-x) for x in z], k)
    elif method == METHOD_CROSS_CHECK:
        value, witness = capacity_lattice(domain, k, budget)
        polar_value, _ = capacity_polar(domain, k, budget)
        if polar_value != value:
            raise CrossCheckMismatchError(
                f"lattice and polar capacities disagree at k={k}: "
                f"{format_rational(value)} vs {format_rational(polar_value)}")
    else:
        raise InvalidInputError(f"unknown method {method!r}")
    return CapacityEntry(k, value, witness, value)


def capacity_sequence(domain: ToricDomain, k_max: int,
                      method: str = METHOD_AUTO,
                      budget: int = DEFAULT_ENUM_BUDGET) -> CapacityReport:
    """Capacities for k = 1..k_max, with witnesses, monotonicity asserted."""
    if k_max < 1:
        raise InvalidInputError(f"k_max must be >= 1, got {k_max}")
    resolved = method if method == METHOD_CROSS_CHECK \
        else _resolve_method(domain, method)
    entries = tuple(_entry(domain, k, resolved, budget)
                    for k in range(1, k_max + 1))
    for a, b in itertools.pairwise(entries):
        assert a.value <= b.value, "capacity sequence must be nondecreasing"
    return CapacityReport(domain, k_max, resolved, entries)


def obstruct_embedding(source: ToricDomain, target: ToricDomain, k_max: int,
                       budget: int = DEFAULT_ENUM_BUDGET) -> ObstructionReport:
    """Scan c_k(source) <= c_k(target) for k <= k_max; report the first
    violation.  Monotonicity of capacities makes a violation an embedding
    obstruction; the converse does not hold, and the report says so."""
    if source.dimension != target.dimension:
        raise DimensionMismatchError(
            f"source dimension {source.dimension} != target dimension "
            f"{target.dimension}")
    if k_max < 1:
        raise InvalidInputError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        cs = capacity_value(source, k, METHOD_AUTO, budget)
        ct = capacity_value(target, k, METHOD_AUTO, budget)
        if cs > ct:
            return ObstructionReport(
                source, target, k_max, "c_k", True, k, cs, ct,
                (f"c_{k}(source) = {format_rational(cs)} > "
                 f"{format_rational(ct)} = c_{k}(target)",))
    return ObstructionReport(source, target, k_max, "c_k", False, None, None,
                             None, (NO_OBSTRUCTION_CAVEAT,))
