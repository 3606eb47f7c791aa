"""Quartic positivity by separation, with applications to Gram-Charlier densities."""
from .core import (
    DiscriminantSet,
    GeneralQuartic,
    PositivityCertificate,
    ReducedQuartic,
    SeparationCertificate,
    Verdict,
    critical_ms,
    d_at_m_minus,
    d_of_m,
    discriminants,
    is_positive,
    is_positive_general,
    reduce,
    separation_witness,
)
from .errors import QuarticError
from .gram_charlier import GCParams, RegionVerdict, gc_boundary, gc_in_region, region_grid

__version__ = "0.1.0"
