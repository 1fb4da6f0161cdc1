"""Exception types shared across the package."""


class SkeinError(Exception):
    """Base class for all skeinlab errors."""


class SchemaError(SkeinError, ValueError):
    """Malformed JSON document or inconsistent object structure."""


class DiagramError(SkeinError, ValueError):
    """Strand diagram is not closed or is otherwise ill-wired."""


class AdmissibilityError(SkeinError, ValueError):
    """Edge labels violate parity or the triangle inequality at a vertex."""


class DegenerateError(SkeinError, ValueError):
    """A required denominator evaluated to zero."""


class BudgetError(SkeinError, RuntimeError):
    """State count exceeds the configured enumeration budget."""


class ReductionError(SkeinError, RuntimeError):
    """The recoupling reducer ran out of moves before reaching base cases."""


class UnsupportedNetworkError(SkeinError, ValueError):
    """Rotation system outside the supported (planar) class."""


class PoleError(SkeinError, ValueError):
    """A gamma factor was requested at a nonpositive integer."""


class GeometryError(SkeinError, ValueError):
    """Circle configuration is geometrically impossible or inexact."""


class LabelingError(SkeinError, ValueError):
    """A packing produced an edge label outside the nonnegative integers."""


class InternalError(SkeinError, RuntimeError):
    """Internal consistency check failed; indicates a bug, not bad input."""
