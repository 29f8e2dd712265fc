"""capax: exact capacities and structural invariants of convex toric domains.

The library computes the capacity sequence c_k of a convex toric domain by
two independent combinatorial algorithms (plus closed forms for ellipsoids,
balls and polydisks), the contact capacities [c]_k of its prequantization,
classical ball-squeezing verdicts, and the integer invariants (minimal
degree, torsion window, corner multisets, circulant index counts) predicted
by the structural theory.  All geometric quantities are exact rationals.
"""

from ._version import __version__
from .capacities import (
    CapacityEntry,
    CapacityReport,
    ObstructionReport,
    capacity_closed_form,
    capacity_lattice,
    capacity_polar,
    capacity_sequence,
    capacity_value,
    obstruct_embedding,
)
from .circulant import (
    CirculantForm,
    circulant_eigenvalues,
    circulant_form,
    circulant_matrix,
    fixed_index_count,
    index_count,
    jacobi_eigenvalues,
)
from .contact import (
    ContactCapacityReport,
    SqueezingReport,
    contact_capacity,
    contact_sequence,
    ekp_squeezing_verdict,
    is_big,
    obstruct_contact_embedding,
    smallest_prime_factor,
)
from .corners import CornerData, corner_analysis, corner_data_from_slice, corner_lemma_check
from .structure import StructureReport, structure_report
from .toric import (
    PolarSlice,
    ToricDomain,
    action_in_domain,
    ball,
    domain_to_spec,
    ellipsoid,
    lattice_functional,
    max_lattice_functional,
    moment_map,
    polar_inf_norm,
    polar_slice,
    polydisk,
    polytope,
    scale_domain,
    support_norm,
    validate_domain,
)

__all__ = [
    "__version__",
    "CapacityEntry", "CapacityReport", "ObstructionReport",
    "capacity_closed_form", "capacity_lattice", "capacity_polar",
    "capacity_sequence", "capacity_value", "obstruct_embedding",
    "CirculantForm", "circulant_eigenvalues", "circulant_form",
    "circulant_matrix", "fixed_index_count", "index_count",
    "jacobi_eigenvalues",
    "ContactCapacityReport", "SqueezingReport", "contact_capacity",
    "contact_sequence", "ekp_squeezing_verdict", "is_big",
    "obstruct_contact_embedding", "smallest_prime_factor",
    "CornerData", "corner_analysis", "corner_data_from_slice",
    "corner_lemma_check",
    "StructureReport", "structure_report",
    "PolarSlice", "ToricDomain", "action_in_domain", "ball",
    "domain_to_spec", "ellipsoid", "lattice_functional",
    "max_lattice_functional", "moment_map", "polar_inf_norm", "polar_slice",
    "polydisk", "polytope", "scale_domain", "support_norm", "validate_domain",
]
