"""Exception hierarchy for quartic_positivity."""


class QuarticError(Exception):
    """Base class for all errors raised by this package."""


class NonFinite(QuarticError, ValueError):
    """A coefficient or parameter is NaN or infinite."""


class NonPositiveLeading(QuarticError, ValueError):
    """Reduction requires a strictly positive leading coefficient."""


class ComplexCritical(QuarticError, ValueError):
    """D'(m) = 0 has no real roots (p**2 + 12*r < 0)."""


class NoWitness(QuarticError):
    """No separation certificate exists for this quartic."""


class InternalInconsistency(QuarticError, RuntimeError):
    """Two routes that must agree by construction disagreed."""


class DegenerateEta4(QuarticError, ValueError):
    """The Gram-Charlier map to a reduced quartic needs eta4 != 0."""


class BadEta4(QuarticError, ValueError):
    """eta4 lies outside the open interval (0, 1/6)."""


class BadGrid(QuarticError, ValueError):
    """Malformed grid ranges or sizes."""


class EmptyInput(QuarticError, ValueError):
    """Nothing to serialize."""


class IncompleteGrid(QuarticError, ValueError):
    """Samples do not form a complete rectangular lattice."""
