"""Gram-Charlier densities and their positivity region.

The density is ``P(z) * phi(z)`` with

    P(z) = 1 + eta3 He3(z) + eta4 He4(z)
         = eta4 z**4 + eta3 z**3 - 6 eta4 z**2 - 3 eta3 z + 3 eta4 + 1.

For ``eta4 > 0``, dividing by ``eta4`` and depressing gives a reduced quartic, so
membership reduces to ``0 < eta4 < 1/6``, ``m_minus < 0`` and ``D(m_minus) < 0``.
The origin (the standard normal) is included by convention.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import core
from .core import DiscriminantSet, GeneralQuartic, ReducedQuartic
from .errors import BadEta4, BadGrid, DegenerateEta4, InternalInconsistency, NonFinite

__all__ = [
    "GCParams",
    "RegionVerdict",
    "RegionTrace",
    "RegionSample",
    "BoundaryCurve",
    "DMPlusWarning",
    "GC_BAND",
    "ETA4_MAX",
    "hermite_p",
    "gc_density",
    "gc_quartic",
    "gc_to_reduced",
    "gc_c4_quantities",
    "gc_m_minus_closed",
    "gc_d_m_minus_closed",
    "gc_in_region",
    "gc_boundary",
    "boundary_curve",
    "grid_axis",
    "region_grid",
    "gc_normalization",
]

ETA4_MAX = 1.0 / 6.0
# band on the raw (eta3, eta4) frontiers eta4 = 0 and eta4 = 1/6
GC_BAND = core.BAND_REL

_GL_X, _GL_W = np.polynomial.legendre.leggauss(256)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


class DMPlusWarning(RuntimeWarning):
    """An Inside point has D(m_plus) < 0, which C3 forbids."""


class RegionVerdict(str, enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class GCParams:
    eta3: float
    eta4: float

    def __post_init__(self):
        object.__setattr__(self, "eta3", float(self.eta3))
        object.__setattr__(self, "eta4", float(self.eta4))
        if not (math.isfinite(self.eta3) and math.isfinite(self.eta4)):
            raise NonFinite(f"non-finite Gram-Charlier parameters {self}")


@dataclass(frozen=True)
class RegionTrace:
    m_minus: float
    d_m_minus: float
    d_m_plus: Optional[float] = None


@dataclass(frozen=True)
class RegionSample:
    params: GCParams
    verdict: RegionVerdict
    trace: Optional[RegionTrace] = None


@dataclass(frozen=True)
class BoundaryCurve:
    """Upper frontier ``eta3_max(eta4)``; the lower one is its mirror image."""

    points: tuple[tuple[float, float], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def hermite_p(z, g: GCParams):
    e3, e4 = g.eta3, g.eta4
    return (((e4 * z + e3) * z - 6.0 * e4) * z - 3.0 * e3) * z + 3.0 * e4 + 1.0


def gc_density(z, g: GCParams):
    return hermite_p(z, g) * _INV_SQRT_2PI * np.exp(-0.5 * np.square(z))


def gc_quartic(g: GCParams) -> GeneralQuartic:
    """``P`` as a general quartic in ``z``."""
    return GeneralQuartic(g.eta4, g.eta3, -6.0 * g.eta4, -3.0 * g.eta3, 3.0 * g.eta4 + 1.0)


def _require_eta4(g: GCParams) -> None:
    if g.eta4 == 0.0:
        raise DegenerateEta4(f"eta4 must be nonzero, got {g}")


def gc_to_reduced(g: GCParams) -> ReducedQuartic:
    """Reduced quartic of ``P / eta4``."""
    _require_eta4(g)
    e3, e4 = g.eta3, g.eta4
    e3_2, e4_2 = e3 * e3, e4 * e4
    p = -3.0 * (e3_2 + 16.0 * e4_2) / (8.0 * e4_2)
    q = (e3_2 * e3) / (8.0 * e4_2 * e4)
    r = -(3.0 * e3_2 * e3_2 - 96.0 * e3_2 * e4_2 - 768.0 * e4_2 * e4_2 - 256.0 * e4_2 * e4) / (256.0 * e4_2 * e4_2)
    return ReducedQuartic(p, q, r)


def gc_c4_quantities(g: GCParams) -> DiscriminantSet:
    """The four C4 quantities written directly in ``(eta3, eta4)``."""
    _require_eta4(g)
    a, b = g.eta3, g.eta4
    a2, b2 = a * a, b * b
    a4, b3, b4 = a2 * a2, b2 * b, b2 * b2
    delta = (108.0 * a4 * a2 + 1620.0 * a4 * b2 + 108.0 * a4 * b - 27.0 * a4 + 10368.0 * a2 * b4
             - 288.0 * a2 * b2 + 27648.0 * b4 * b2 - 2304.0 * b4 + 256.0 * b3) / (b4 * b2)
    delta_d = (-3.0 * a4 - 48.0 * a2 * b2 - 384.0 * b4 + 64.0 * b3) / (16.0 * b4)
    delta_p = -3.0 * (a2 + 16.0 * b2) / (8.0 * b2)
    delta_q = (a2 * a) / (8.0 * b3)
    return DiscriminantSet(delta, delta_d, delta_p, delta_q)


def _radicand(g: GCParams) -> float:
    return 3.0 * g.eta3 * g.eta3 + 24.0 * g.eta4 * g.eta4 + 4.0 * g.eta4


def gc_m_minus_closed(g: GCParams) -> float:
    """``m_minus`` written directly in ``(eta3, eta4)``."""
    _require_eta4(g)
    a2, b = g.eta3 * g.eta3, g.eta4
    return (3.0 * a2 + 48.0 * b * b - math.sqrt(48.0) * b * math.sqrt(_radicand(g))) / (24.0 * b * b)


def gc_d_m_minus_closed(g: GCParams, const_exponent: float = -0.5) -> float:
    """``D(m_minus)`` written directly in ``(eta3, eta4)``.

    The radical term carries the constant ``(27/4)**const_exponent``.  Only
    ``-0.5`` agrees with the general closed form; ``-1.5`` is kept callable so
    the discrepancy can be demonstrated.
    """
    _require_eta4(g)
    a2, b = g.eta3 * g.eta3, g.eta4
    num = (6.0 * a2 * b + a2 + 32.0 * b**3 + 16.0 * b * b
           - (27.0 / 4.0) ** const_exponent * _radicand(g) ** 1.5)
    return num / b**3


def gc_in_region(g: GCParams) -> RegionSample:
    e3, e4 = g.eta3, g.eta4
    if e4 <= 0.0:
        inside = e4 == 0.0 and e3 == 0.0
        return RegionSample(g, RegionVerdict.INSIDE if inside else RegionVerdict.OUTSIDE)
    if e4 >= ETA4_MAX:
        return RegionSample(g, RegionVerdict.OUTSIDE)
    if e4 <= GC_BAND:
        return RegionSample(g, RegionVerdict.BOUNDARY)

    rq = gc_to_reduced(g)
    cp = core.critical_ms(rq)
    d_minus = core.d_at_m_minus(rq)
    d_plus = core.d_of_m(rq, cp.m_plus)
    band = core.boundary_band(rq)
    inside = core._and(
        core._gt0(ETA4_MAX - e4, GC_BAND),
        core._gt0(-cp.m_minus, band),
        core._gt0(-d_minus, band),
    )
    if __debug__ and inside is True and d_plus < -band:
        warnings.warn(f"D(m_plus) = {d_plus!r} < 0 at Inside point {g}", DMPlusWarning, stacklevel=2)
    verdict = {True: RegionVerdict.INSIDE, False: RegionVerdict.OUTSIDE, None: RegionVerdict.BOUNDARY}[inside]
    return RegionSample(g, verdict, RegionTrace(cp.m_minus, d_minus, d_plus))


def _is_inside(eta3: float, eta4: float) -> bool:
    return gc_in_region(GCParams(eta3, eta4)).verdict is RegionVerdict.INSIDE


def gc_boundary(eta4: float, tol: float = 1e-10) -> float:
    """Largest ``eta3 >= 0`` still inside the region at this ``eta4``, by bisection."""
    if not (0.0 < eta4 < ETA4_MAX):
        raise BadEta4(f"eta4 must lie in (0, 1/6), got {eta4!r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    if not _is_inside(0.0, eta4):
        # only reachable within the boundary band of eta4 = 0 or eta4 = 1/6
        raise BadEta4(f"eta3 = 0 is not strictly inside at eta4 = {eta4!r}")
    lo, hi = 0.0, 1.0
    if _is_inside(hi, eta4):
        raise InternalInconsistency(f"eta3 = 1 classified inside at eta4 = {eta4!r}")
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if _is_inside(mid, eta4):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def boundary_curve(eta4_values, tol: float = 1e-10) -> BoundaryCurve:
    pts = sorted((float(e4), gc_boundary(float(e4), tol)) for e4 in eta4_values)
    return BoundaryCurve(tuple(pts))


def grid_axis(lo: float, hi: float, n: int) -> list[float]:
    """``n`` equispaced points, exactly mirror-symmetric about the midpoint."""
    c, h = 0.5 * (lo + hi), 0.5 * (hi - lo)
    pts = [c + h * ((2 * k - (n - 1)) / (n - 1)) for k in range(n)]
    pts[0], pts[-1] = lo, hi
    return pts


def region_grid(eta4_range, eta3_range, nx: int, ny: int) -> list[RegionSample]:
    """Evaluate membership on an ``ny`` x ``nx`` lattice.

    Rows run over ``eta3`` (ascending), columns over ``eta4`` (ascending).
    """
    (x0, x1), (y0, y1) = map(tuple, (eta4_range, eta3_range))
    if nx < 2 or ny < 2:
        raise BadGrid(f"need nx, ny >= 2, got {nx}x{ny}")
    if not all(math.isfinite(v) for v in (x0, x1, y0, y1)) or not (x0 < x1 and y0 < y1):
        raise BadGrid(f"ranges must be finite and increasing: {eta4_range}, {eta3_range}")
    xs = grid_axis(x0, x1, nx)
    return [gc_in_region(GCParams(e3, e4)) for e3 in grid_axis(y0, y1, ny) for e4 in xs]


def gc_normalization(g: GCParams) -> float:
    """Integral of the density over [-12, 12] (256-point Gauss-Legendre)."""
    z = 12.0 * _GL_X
    return float(12.0 * np.dot(_GL_W, gc_density(z, g)))
