"""Exception taxonomy for capax.

Every error raised by the library derives from CapaxError, so callers
(notably the CLI) can map failures onto exit codes without string matching.
"""

from __future__ import annotations


class CapaxError(Exception):
    """Base class for all capax errors."""


class ValidationError(CapaxError):
    """Base class for input-validation failures (CLI exit code 1)."""


# -- domain validation ------------------------------------------------------

class NonPositiveParameterError(ValidationError):
    """Some shape parameter a_i <= 0."""


class NotDownwardClosedError(ValidationError):
    """A polytope vertex has a coordinate-zeroed projection outside the body."""


class NotConvexError(ValidationError):
    """The polytope vertex list is not its own set of extreme points."""


class NegativeVertexCoordinateError(ValidationError):
    """A polytope vertex lies outside the nonnegative orthant."""


class EmptyDomainError(ValidationError):
    """No vertices / no parameters / dimension zero."""


class UnboundedDomainError(ValidationError):
    """An infinite parameter or vertex coordinate was supplied."""


class NegativeActionValueError(ValidationError):
    """A moment-map action value is negative."""


class NegativeDirectionError(ValidationError):
    """support_norm queried with a direction outside the nonnegative orthant."""


class NegativeTError(ValidationError):
    """Polar slice requested at T < 0."""


class EmptySliceError(ValidationError):
    """Operation on an empty polar slice."""


class DegenerateExtentError(ValidationError):
    """The moment body is lower-dimensional (some coordinate extent is 0)."""


class NonPositiveScaleError(ValidationError):
    """scale_domain called with s <= 0."""


class DimensionMismatchError(ValidationError):
    """Two domains of different ambient dimension were combined."""


class InvalidInputError(ValidationError):
    """Generic precondition violation not covered by a specific class."""


# -- computation-level ------------------------------------------------------

class KTooLargeForEnumerationError(CapaxError):
    """The composition count exceeds the enumeration budget (CLI exit 2)."""

    def __init__(self, count: int, budget: int):
        super().__init__(
            f"enumeration would visit {count} lattice vectors, "
            f"exceeding the budget of {budget}"
        )
        self.count = count
        self.budget = budget


class CrossCheckMismatchError(CapaxError):
    """The two independent capacity algorithms disagree (CLI exit 3)."""


class NotApplicableError(CapaxError):
    """Closed-form capacity requested for a shape without one."""


class NotBigError(CapaxError):
    """Contact capacities requested for a non-big domain (CLI exit 4)."""


class NotAdmissibleError(CapaxError):
    """Structure report requested outside the admissible (T, ell) window (CLI exit 5)."""


class InvalidOrderError(ValidationError):
    """Squeezing verdict requested with R2 < r2."""


class EvenProductError(ValidationError):
    """Circulant form with even M*ell."""


class EvenEllError(ValidationError):
    """Structure report requested with even ell."""


class PointNotInSliceError(ValidationError):
    """An eta point lies outside the polar slice."""


class NotStarShapedError(ValidationError):
    """Box union fails the origin star-shape check."""


class NotSaturatedError(ValidationError):
    """Box union is not saturated and saturation was not requested."""


class UnboundedError(ValidationError):
    """Box union is unbounded or otherwise not compact."""
