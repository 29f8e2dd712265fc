"""Numerical shadow of the structural theorem for convex toric domains.

For an admissible pair (T, ell), meaning odd ell >= 3 and
T < p_ell / ||Omega^o_1||_inf, the equivariant invariant of the domain is a
rank-2 module over F_p[u] whose shape is pinned by integer data computable
from the polar slice:

* minimal degree  -2 I(Omega^o_T), where I is the lattice-functional maximum
  over the slice;
* torsion confined to degrees [-2 I(Omega^o_T), -1] (empty window when the
  maximum is 0), with no torsion at all for ellipsoids;
* a degree shift u^{I(Z)} for every point Z of the slice;
* one corner of the slice per generator in the conjectural bouquet picture
  (reported as a heuristic multiset, not a theorem).

Outside the admissible window the theorem says nothing and the report says
so instead of extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .contact import smallest_prime_factor
from .corners import CornerData, corner_data_from_slice
from .errors import EvenEllError, NegativeTError, PointNotInSliceError
from .rationals import RationalLike, format_rational, to_fraction, to_fraction_vector
from .toric import (
    BALL,
    ELLIPSOID,
    ToricDomain,
    Vector,
    lattice_functional,
    max_lattice_functional,
    polar_inf_norm,
    polar_slice,
)

BOUQUET_NOTE = (
    "bouquet_corners is HEURISTIC: the torsion dimensions are not pinned by "
    "any theorem; only the corner multiset of the slice is reported."
)
TORSION_NOTE = (
    "torsion_free=True is guaranteed for ellipsoids and balls only; False "
    "means 'not guaranteed', not 'torsion present'."
)


@dataclass(frozen=True)
class StructureReport:
    domain: ToricDomain
    T: Fraction
    ell: int
    p_ell: int
    admissible: bool
    admissibility_bound: Fraction  # p_ell / ||Omega^o_1||_inf
    min_degree: Optional[int] = None
    torsion_window: Optional[tuple[int, int]] = None
    free_rank: Optional[int] = None
    eta_exponents: tuple[tuple[Vector, int], ...] = ()
    bouquet_corners: Optional[tuple[int, ...]] = None
    torsion_free: Optional[bool] = None
    corner_data: Optional[CornerData] = field(default=None, compare=False)
    notes: tuple[str, ...] = ()


def structure_report(domain: ToricDomain, T: RationalLike, ell: int,
                     eta_points: Optional[Sequence[Sequence[RationalLike]]] = None
                     ) -> StructureReport:
    """Structural invariants at level T with ell-fold symmetry.

    Raises EvenEllError for even or too-small ell and PointNotInSliceError
    for an eta point outside the slice; an inadmissible (T, ell) yields a
    report carrying only the admissibility verdict.
    """
    t = to_fraction(T)
    if t < 0:
        raise NegativeTError(f"T must be >= 0, got {t}")
    if ell % 2 == 0 or ell < 3:
        raise EvenEllError(f"ell must be odd and >= 3, got {ell}")
    p = smallest_prime_factor(ell)
    norm = polar_inf_norm(domain)
    bound = Fraction(p) / norm
    if t * norm >= p:
        return StructureReport(
            domain, t, ell, p, False, bound,
            notes=(f"not admissible: T = {format_rational(t)} >= "
                   f"p_ell/||Omega^o_1||_inf = {format_rational(bound)}",))

    slice_ = polar_slice(domain, t)
    max_i, _ = max_lattice_functional(slice_)
    min_degree = -2 * max_i
    window = (min_degree, -1) if max_i > 0 else None

    exponents = []
    for raw in (eta_points or ()):
        z = to_fraction_vector(raw)
        if not slice_.contains(z):
            raise PointNotInSliceError(
                f"eta point {tuple(map(str, z))} is outside Omega^o_T at "
                f"T={format_rational(t)}")
        exponents.append((z, lattice_functional(z)))

    corners = corner_data_from_slice(slice_)
    bouquet = tuple(sorted(sum(v) for v in corners.boundary_J))
    torsion_free = domain.shape in (ELLIPSOID, BALL)

    notes = [BOUQUET_NOTE]
    if not torsion_free:
        notes.append(TORSION_NOTE)
    return StructureReport(
        domain, t, ell, p, True, bound,
        min_degree=min_degree,
        torsion_window=window,
        free_rank=2,
        eta_exponents=tuple(exponents),
        bouquet_corners=bouquet,
        torsion_free=torsion_free,
        corner_data=corners,
        notes=tuple(notes))
