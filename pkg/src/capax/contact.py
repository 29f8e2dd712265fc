"""Contact capacities of prequantized toric domains and squeezing verdicts.

The contact capacity [c]_k of X_Omega x S^1 is the least odd ell that
(a) clears the bigness constraint ell / p_ell < 1 / ||Omega^o_1||_inf,
where p_ell is the smallest prime factor of ell, and (b) satisfies
ell >= c_k(X_Omega).  The scan over odd ell always terminates: odd primes
have ell / p_ell = 1, which is admissible for every big domain.

ell = 1 is excluded from the scan (p_1 is undefined), so outputs start at 3.
Bigness is the strict inequality ||Omega^o_1||_inf < 1; boundary domains
are rejected.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .capacities import (
    DEFAULT_ENUM_BUDGET,
    METHOD_AUTO,
    ObstructionReport,
    capacity_value,
)
from .errors import (
    DimensionMismatchError,
    InvalidInputError,
    InvalidOrderError,
    NotBigError,
)
from .rationals import RationalLike, format_rational, to_fraction
from .toric import ToricDomain, polar_inf_norm

SOURCE_INTERNAL = "internal"
SOURCE_OVERRIDE = "override"

NON_SQUEEZABLE = "NonSqueezable"
SQUEEZABLE = "Squeezable"
CHIU_NON_SQUEEZABLE = "ChiuNonSqueezable"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ContactEntry:
    k: int
    c_k: Fraction
    c_source: str  # "internal" or "override"
    contact_c_k: int
    spf: int


@dataclass(frozen=True)
class ContactCapacityReport:
    domain: ToricDomain
    k_max: int
    polar_inf_norm: Fraction
    big: bool
    entries: tuple[ContactEntry, ...]
    notes: tuple[str, ...] = ()

    def contact_values(self) -> tuple[int, ...]:
        return tuple(e.contact_c_k for e in self.entries)


@dataclass(frozen=True)
class SqueezingReport:
    r2: Fraction
    R2: Fraction
    dimension: int
    verdict: str
    integer_witness: Optional[int]
    notes: tuple[str, ...]


def smallest_prime_factor(n: int) -> int:
    """Least prime dividing n, by trial division up to sqrt(n)."""
    if n < 2:
        raise InvalidInputError(f"smallest prime factor needs n >= 2, got {n}")
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


def is_big(domain: ToricDomain) -> bool:
    """Strict bigness criterion ||Omega^o_1||_inf < 1."""
    return polar_inf_norm(domain) < 1


def _admissible(ell: int, norm: Fraction) -> bool:
    # ell / p_ell < 1 / norm, kept in cleared-denominator form.
    return ell * norm < smallest_prime_factor(ell)


def contact_capacity(domain: ToricDomain, k: int,
                     c_k: Optional[RationalLike] = None,
                     budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Least admissible odd ell >= c_k (ell >= 3).

    `c_k` overrides the internally computed capacity; this is how the
    published example table is reproduced verbatim.
    """
    norm = polar_inf_norm(domain)
    if norm >= 1:
        raise NotBigError(
            f"domain is not big: ||Omega^o_1||_inf = {format_rational(norm)} >= 1")
    value = to_fraction(c_k) if c_k is not None \
        else capacity_value(domain, k, METHOD_AUTO, budget)
    ell = max(3, math.ceil(value))
    if ell % 2 == 0:
        ell += 1
    while not _admissible(ell, norm):
        ell += 2
    return ell


def contact_sequence(domain: ToricDomain, k_max: int,
                     c_row_override: Optional[Sequence[RationalLike]] = None,
                     budget: int = DEFAULT_ENUM_BUDGET) -> ContactCapacityReport:
    """Contact capacities for k = 1..k_max, optionally from a supplied c row."""
    norm = polar_inf_norm(domain)
    if norm >= 1:
        raise NotBigError(
            f"domain is not big: ||Omega^o_1||_inf = {format_rational(norm)} >= 1")
    if k_max < 1:
        raise InvalidInputError(f"k_max must be >= 1, got {k_max}")

    overrides: Optional[tuple[Fraction, ...]] = None
    if c_row_override is not None:
        overrides = tuple(to_fraction(x) for x in c_row_override)
        if len(overrides) != k_max:
            raise InvalidInputError(
                f"override row has {len(overrides)} entries, expected {k_max}")
        if any(a > b for a, b in itertools.pairwise(overrides)):
            raise InvalidInputError("override c row must be nondecreasing")

    entries = []
    for k in range(1, k_max + 1):
        if overrides is not None:
            c_val = overrides[k - 1]
            source = SOURCE_OVERRIDE
        else:
            c_val = capacity_value(domain, k, METHOD_AUTO, budget)
            source = SOURCE_INTERNAL
        ell = contact_capacity(domain, k, c_val, budget)
        entries.append(ContactEntry(k, c_val, source, ell,
                                    smallest_prime_factor(ell)))
    for a, b in itertools.pairwise(entries):
        assert a.contact_c_k <= b.contact_c_k, \
            "contact capacity sequence must be nondecreasing"
    return ContactCapacityReport(domain, k_max, norm, True, tuple(entries))


def ekp_squeezing_verdict(r2: RationalLike, R2: RationalLike,
                          dimension: int = 2) -> SqueezingReport:
    """Squeezability of B_{pi R^2} x S^1 into B_{pi r^2} x S^1.

    Arguments are the action values pi r^2 and pi R^2 directly.  The
    large-scale criterion (1 <= pi r^2 < pi R^2) takes precedence; when an
    integer also lies in [pi r^2, pi R^2] both criteria are recorded.  The
    small-ball squeezing statement needs dimension >= 2.
    """
    small = to_fraction(r2)
    large = to_fraction(R2)
    if small <= 0:
        raise InvalidInputError(f"pi r^2 must be positive, got {small}")
    if large < small:
        raise InvalidOrderError(
            f"pi R^2 = {format_rational(large)} < pi r^2 = {format_rational(small)}")

    witness: Optional[int] = None
    if math.ceil(small) <= math.floor(large):
        witness = math.ceil(small)
    notes: list[str] = []

    if small >= 1 and small < large:
        verdict = CHIU_NON_SQUEEZABLE
        notes.append("large-scale criterion: 1 <= pi r^2 < pi R^2")
        if witness is not None:
            notes.append(
                f"integer criterion also applies: m = {witness} lies in "
                f"[pi r^2, pi R^2]")
    elif witness is not None:
        verdict = NON_SQUEEZABLE
        notes.append(f"integer m = {witness} lies in [pi r^2, pi R^2]")
    elif large < 1:
        if dimension >= 2:
            verdict = SQUEEZABLE
            notes.append(
                "both balls are small (pi r^2, pi R^2 < 1); squeezing exists "
                f"for dimension {dimension} >= 2")
        else:
            verdict = UNKNOWN
            notes.append(
                "small-ball squeezing requires dimension >= 2; no verdict "
                "for dimension 1")
    else:
        verdict = UNKNOWN
        notes.append("no stated criterion applies")
    return SqueezingReport(small, large, dimension, verdict, witness,
                           tuple(notes))


def obstruct_contact_embedding(source: ToricDomain, target: ToricDomain,
                               k_max: int,
                               budget: int = DEFAULT_ENUM_BUDGET
                               ) -> ObstructionReport:
    """First k <= k_max with [c]_k(source) > [c]_k(target), if any.

    Both domains must be big; contact capacities are monotone under
    inclusion, so a violation obstructs the prequantized embedding."""
    if source.dimension != target.dimension:
        raise DimensionMismatchError(
            f"source dimension {source.dimension} != target dimension "
            f"{target.dimension}")
    for domain, name in ((source, "source"), (target, "target")):
        if not is_big(domain):
            raise NotBigError(f"{name} domain is not big")
    from .capacities import NO_OBSTRUCTION_CAVEAT
    for k in range(1, k_max + 1):
        cs = contact_capacity(source, k, budget=budget)
        ct = contact_capacity(target, k, budget=budget)
        if cs > ct:
            return ObstructionReport(
                source, target, k_max, "[c]_k", True, k,
                Fraction(cs), Fraction(ct),
                (f"[c]_{k}(source) = {cs} > {ct} = [c]_{k}(target)",))
    return ObstructionReport(source, target, k_max, "[c]_k", False, None,
                             None, None, (NO_OBSTRUCTION_CAVEAT,))
