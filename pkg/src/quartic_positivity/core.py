"""Positivity of quartic polynomials by separation.

A reduced quartic ``f(x) = x**4 + p x**2 + q x + r`` splits, for any real
``m``, as ``f = h_m - g_m`` with

    h_m(x) = (x**2 + p/2 + m)**2                      (never negative)
    g_m(x) = 2m x**2 - q x + (m + p/2)**2 - r         (a quadratic in x)

For ``m < 0`` the quadratic ``g_m`` opens downward, so ``f > 0`` everywhere as
soon as ``g_m`` has negative discriminant ``D(m)``.  The cubic ``D`` has its
local minimum at ``m_minus``, which makes ``m_minus`` the natural witness.

Strict inequalities are decided with a scale-aware band ``delta``.  Values
inside the band are *unknown* and propagate through the conditions with
three-valued logic; an unknown outcome becomes the ``BOUNDARY`` verdict.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import oracle
from .errors import (
    ComplexCritical,
    InternalInconsistency,
    NonFinite,
    NonPositiveLeading,
    NoWitness,
)

__all__ = [
    "GeneralQuartic",
    "ReducedQuartic",
    "DiscriminantSet",
    "CriticalPair",
    "SeparationCertificate",
    "Trace",
    "PositivityCertificate",
    "Verdict",
    "boundary_band",
    "reduce",
    "eval_reduced",
    "d_of_m",
    "d_prime_of_m",
    "critical_ms",
    "d_at_m_minus",
    "discriminants",
    "check_c2",
    "check_c3",
    "check_c3_tristate",
    "check_c4",
    "check_c4_tristate",
    "separation_witness",
    "is_positive",
    "is_positive_general",
]

BAND_REL = 1e-9

Tri = Optional[bool]  # None means "inside the boundary band"


class Verdict(str, enum.Enum):
    POSITIVE = "positive"
    NOT_POSITIVE = "not_positive"
    BOUNDARY = "boundary"


def _require_finite(*values: float) -> None:
    if not all(math.isfinite(v) for v in values):
        raise NonFinite(f"non-finite coefficient in {values}")


@dataclass(frozen=True)
class GeneralQuartic:
    """``a x**4 + b x**3 + c x**2 + d x + e``."""

    a: float
    b: float
    c: float
    d: float
    e: float

    def __post_init__(self):
        for k in ("a", "b", "c", "d", "e"):
            object.__setattr__(self, k, float(getattr(self, k)))
        _require_finite(self.a, self.b, self.c, self.d, self.e)

    def __call__(self, x: float) -> float:
        return (((self.a * x + self.b) * x + self.c) * x + self.d) * x + self.e

    def scaled(self, lam: float) -> GeneralQuartic:
        return GeneralQuartic(lam * self.a, lam * self.b, lam * self.c, lam * self.d, lam * self.e)


@dataclass(frozen=True)
class ReducedQuartic:
    """``x**4 + p x**2 + q x + r``."""

    p: float
    q: float
    r: float

    def __post_init__(self):
        for k in ("p", "q", "r"):
            object.__setattr__(self, k, float(getattr(self, k)))
        _require_finite(self.p, self.q, self.r)

    def __call__(self, x: float) -> float:
        return eval_reduced(self, x)


@dataclass(frozen=True)
class DiscriminantSet:
    delta: float
    delta_d: float
    delta_p: float
    delta_q: float


@dataclass(frozen=True)
class CriticalPair:
    """Roots of ``D'(m) = 0``; both ``nan`` when ``exists`` is false."""

    m_minus: float
    m_plus: float
    exists: bool


@dataclass(frozen=True)
class SeparationCertificate:
    """Witness that ``f = h_m - g_m`` with ``h_m >= 0`` and ``g_m < 0``.

    ``g_coeffs`` are ``(x**2, x, 1)`` coefficients of ``g_m``.
    """

    m: float
    h_shift: float
    g_coeffs: tuple[float, float, float]
    g_max: float

    def h(self, x):
        return (x * x + self.h_shift) ** 2

    def g(self, x):
        g2, g1, g0 = self.g_coeffs
        return (g2 * x + g1) * x + g0


@dataclass(frozen=True)
class Trace:
    delta: Optional[float] = None
    delta_d: Optional[float] = None
    delta_p: Optional[float] = None
    delta_q: Optional[float] = None
    m_minus: Optional[float] = None
    m_plus: Optional[float] = None
    d_m_minus: Optional[float] = None
    d_m_plus: Optional[float] = None
    # "first" for {Delta>0, (DeltaD>0 or DeltaP>0)}, "second" for
    # {DeltaD=0, DeltaP>0, DeltaQ=0}, None if neither is definitely satisfied
    c4_branch: Optional[str] = None
    degenerate: bool = False

    SCALARS = ("delta", "delta_d", "delta_p", "delta_q", "m_minus", "m_plus", "d_m_minus", "d_m_plus")

    def scalars(self) -> dict[str, Optional[float]]:
        return {k: getattr(self, k) for k in self.SCALARS}


@dataclass(frozen=True)
class PositivityCertificate:
    verdict: Verdict
    witness: Optional[SeparationCertificate]
    trace: Trace


# --- three-valued comparisons --------------------------------------------------

def _gt0(x: float, band: float) -> Tri:
    if x > band:
        return True
    if x < -band or band == 0.0:
        return False
    return None


def _ge0(x: float, band: float) -> bool:
    return x >= -band


def _eq0(x: float, band: float) -> bool:
    return abs(x) <= band


def _and(*vals: Tri) -> Tri:
    if any(v is False for v in vals):
        return False
    if any(v is None for v in vals):
        return None
    return True


def _or(*vals: Tri) -> Tri:
    if any(v is True for v in vals):
        return True
    if any(v is None for v in vals):
        return None
    return False


def boundary_band(rq: ReducedQuartic) -> float:
    return BAND_REL * max(1.0, rq.p * rq.p + abs(rq.q) + abs(rq.r))


def _band(rq: ReducedQuartic, delta: Optional[float]) -> float:
    return boundary_band(rq) if delta is None else delta


# --- formulas ------------------------------------------------------------------

def reduce(gq: GeneralQuartic) -> tuple[ReducedQuartic, float]:
    """Depress ``gq`` by ``z = x + b/(4a)``.

    Returns the reduced quartic of ``gq / a`` and the shift ``b/(4a)``.
    """
    _require_finite(gq.a, gq.b, gq.c, gq.d, gq.e)
    if not gq.a > 0.0:
        raise NonPositiveLeading(f"leading coefficient must be > 0, got {gq.a!r}")
    B, C, D, E = gq.b / gq.a, gq.c / gq.a, gq.d / gq.a, gq.e / gq.a
    B2 = B * B
    p = C - 3.0 * B2 / 8.0
    q = B2 * B / 8.0 - B * C / 2.0 + D
    r = E - B * D / 4.0 + B2 * C / 16.0 - 3.0 * B2 * B2 / 256.0
    return ReducedQuartic(p, q, r), B / 4.0


def eval_reduced(rq: ReducedQuartic, x: float) -> float:
    x2 = x * x
    return (x2 + rq.p) * x2 + rq.q * x + rq.r


def d_of_m(rq: ReducedQuartic, m: float) -> float:
    """Discriminant of ``g_m``: ``-8m(m**2 + p m + p**2/4 - r) + q**2``."""
    p, q, r = rq.p, rq.q, rq.r
    return -8.0 * m * (m * m + p * m + p * p / 4.0 - r) + q * q


def d_prime_of_m(rq: ReducedQuartic, m: float) -> float:
    p, r = rq.p, rq.r
    return -8.0 * (3.0 * m * m + 2.0 * p * m + p * p / 4.0 - r)


def critical_ms(rq: ReducedQuartic) -> CriticalPair:
    """Stationary points ``(-2p -+ sqrt(p**2 + 12 r)) / 6`` of ``D``."""
    p, r = rq.p, rq.r
    disc = p * p + 12.0 * r
    if disc < 0.0:
        return CriticalPair(math.nan, math.nan, False)
    s = math.sqrt(disc)
    # the product of the roots is (p**2 - 4r)/12; use it for the root that
    # would otherwise suffer cancellation
    prod = (p * p - 4.0 * r) / 12.0
    m_minus, m_plus = (-2.0 * p - s) / 6.0, (-2.0 * p + s) / 6.0
    if p > 0.0 and m_minus != 0.0:
        m_plus = prod / m_minus
    elif p < 0.0 and m_plus != 0.0:
        m_minus = prod / m_plus
    return CriticalPair(m_minus, m_plus, True)


def d_at_m_minus(rq: ReducedQuartic) -> float:
    """Closed form ``((2p**3 - 72pr + 27q**2) - 2(p**2 + 12r)**1.5) / 27``."""
    p, q, r = rq.p, rq.q, rq.r
    disc = p * p + 12.0 * r
    if disc < 0.0:
        raise ComplexCritical(f"p**2 + 12r = {disc!r} < 0")
    return ((2.0 * p**3 - 72.0 * p * r + 27.0 * q * q) - 2.0 * disc * math.sqrt(disc)) / 27.0


def discriminants(rq: ReducedQuartic) -> DiscriminantSet:
    p, q, r = rq.p, rq.q, rq.r
    p2, q2 = p * p, q * q
    delta = (16.0 * p2 * p2 * r - 4.0 * p2 * p * q2 - 128.0 * p2 * r * r
             + 144.0 * p * q2 * r - 27.0 * q2 * q2 + 256.0 * r**3)
    return DiscriminantSet(delta, 4.0 * r - p2, p, q)


# --- conditions ----------------------------------------------------------------

def check_c2(rq: ReducedQuartic) -> bool:
    """``D(m) = 0`` has >= 2 distinct real roots, one of them a negative simple root."""
    p, q, r = rq.p, rq.q, rq.r
    cubic = oracle.CubicCoeffs(-8.0, -8.0 * p, 8.0 * r - 2.0 * p * p, q * q)
    roots = oracle.cubic_real_roots(cubic)
    return len(roots) >= 2 and any(rt.value < 0.0 and rt.multiplicity == 1 for rt in roots)


def check_c3_tristate(rq: ReducedQuartic, delta: Optional[float] = None) -> Tri:
    band = _band(rq, delta)
    distinct = _gt0(rq.p * rq.p + 12.0 * rq.r, band)
    if distinct is False:
        return False
    cp = critical_ms(rq)
    if not cp.exists:  # disc < 0 but inside the band: treat as a double root at -p/3
        cp = CriticalPair(-rq.p / 3.0, -rq.p / 3.0, True)
    return _and(distinct,
                _gt0(-cp.m_minus, band),
                _gt0(-d_of_m(rq, cp.m_minus), band),
                _ge0(d_of_m(rq, cp.m_plus), band))


def check_c3(rq: ReducedQuartic, delta: Optional[float] = None) -> bool:
    """True only when C3 holds outside the boundary band."""
    return check_c3_tristate(rq, delta) is True


def _c4_parts(ds: DiscriminantSet, band: float) -> tuple[Tri, Tri]:
    first = _and(_gt0(ds.delta, band), _or(_gt0(ds.delta_d, band), _gt0(ds.delta_p, band)))
    second = _and(_eq0(ds.delta_d, band), _gt0(ds.delta_p, band), _eq0(ds.delta_q, band))
    return first, second


def check_c4_tristate(rq: ReducedQuartic, delta: Optional[float] = None) -> Tri:
    return _or(*_c4_parts(discriminants(rq), _band(rq, delta)))


def check_c4(rq: ReducedQuartic, delta: Optional[float] = None) -> bool:
    """True only when C4 holds outside the boundary band."""
    return check_c4_tristate(rq, delta) is True


def _witness_at(rq: ReducedQuartic, m: float) -> SeparationCertificate:
    p, q, r = rq.p, rq.q, rq.r
    g0 = (m + p / 2.0) ** 2 - r
    return SeparationCertificate(
        m=m,
        h_shift=p / 2.0 + m,
        g_coeffs=(2.0 * m, 0.0 - q, g0),
        g_max=g0 - q * q / (8.0 * m),
    )


def separation_witness(rq: ReducedQuartic, delta: Optional[float] = None) -> SeparationCertificate:
    """Certificate at ``m = m_minus``; raises :class:`NoWitness` unless C3 holds."""
    if not check_c3(rq, delta):
        raise NoWitness(f"C3 does not hold for {rq}")
    cert = _witness_at(rq, critical_ms(rq).m_minus)
    if not (cert.m < 0.0 and cert.g_max < 0.0):
        raise InternalInconsistency(f"C3 holds but witness is invalid: {cert}")
    return cert


def _trace(rq: ReducedQuartic, band: float) -> Trace:
    ds = discriminants(rq)
    cp = critical_ms(rq)
    first, second = _c4_parts(ds, band)
    branch = "first" if first is True else "second" if second is True else None
    if cp.exists:
        dm, dp = d_of_m(rq, cp.m_minus), d_of_m(rq, cp.m_plus)
        mm, mp = cp.m_minus, cp.m_plus
    else:
        dm = dp = mm = mp = None
    return Trace(ds.delta, ds.delta_d, ds.delta_p, ds.delta_q, mm, mp, dm, dp, branch)


def _exact_reduce(gq: GeneralQuartic) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c, d, e = (Fraction(v) for v in (gq.a, gq.b, gq.c, gq.d, gq.e))
    B, C, D, E = b / a, c / a, d / a, e / a
    return C - 3 * B**2 / 8, B**3 / 8 - B * C / 2 + D, E - B * D / 4 + B**2 * C / 16 - 3 * B**4 / 256


def _exact_g_max(pqr: tuple[Fraction, Fraction, Fraction], m: float) -> Fraction:
    p, q, r = pqr
    mf = Fraction(m)
    return (mf + p / 2) ** 2 - r - q * q / (8 * mf)


def _neighbours(x: float, ulps: int = 2) -> list[float]:
    out = [x]
    lo = hi = x
    for _ in range(ulps):
        lo, hi = math.nextafter(lo, -math.inf), math.nextafter(hi, math.inf)
        out += [lo, hi]
    return out


def _exact_nonpositive_point(coeffs: tuple[float, ...], xs) -> Optional[float]:
    """First ``x`` in ``xs`` where the polynomial is exactly <= 0, if any."""
    cs = [Fraction(c) for c in coeffs]
    for x in xs:
        xf, acc = Fraction(x), Fraction(0)
        for c in cs:
            acc = acc * xf + c
        if acc <= 0:
            return x
    return None


def _resolve_band(rq: ReducedQuartic, c3: Tri, c4: Tri, gq: Optional[GeneralQuartic] = None,
                  shift: float = 0.0) -> tuple[Optional[Verdict], Optional[SeparationCertificate]]:
    """Settle a band case by exact rational arithmetic on the input coefficients.

    ``POSITIVE`` needs the float ``m_minus`` to give an exactly negative
    ``g_max`` for the exactly reduced input, which makes ``f = h_m - g_m`` a
    proof.  ``NOT_POSITIVE`` needs a float point where the input polynomial
    is exactly <= 0.  Definite condition outcomes are never overridden.
    """
    if gq is None:
        exact_pqr = (Fraction(rq.p), Fraction(rq.q), Fraction(rq.r))
        coeffs = (1.0, 0.0, rq.p, rq.q, rq.r)
    else:
        exact_pqr = _exact_reduce(gq)
        coeffs = (gq.a, gq.b, gq.c, gq.d, gq.e)
    if c3 is not False and c4 is not False:
        cp = critical_ms(rq)
        if cp.exists and cp.m_minus < 0.0:
            exact = _exact_g_max(exact_pqr, cp.m_minus)
            if exact < 0:
                w = _witness_at(rq, cp.m_minus)
                if not w.g_max < 0.0:
                    w = SeparationCertificate(w.m, w.h_shift, w.g_coeffs, float(exact))
                return Verdict.POSITIVE, w
    if c3 is not True and c4 is not True:
        a, b, c, d, _ = coeffs
        candidates = [z.value - shift for z in
                      oracle.cubic_real_roots(oracle.CubicCoeffs(4.0, 0.0, 2.0 * rq.p, rq.q))]
        candidates += [x.value for x in
                       oracle.cubic_real_roots(oracle.CubicCoeffs(4.0 * a, 3.0 * b, 2.0 * c, d))]
        xs = [x for x0 in candidates for x in _neighbours(x0)]
        if _exact_nonpositive_point(coeffs, xs) is not None:
            return Verdict.NOT_POSITIVE, None
    return None, None


def _decide(rq: ReducedQuartic, delta: Optional[float], resolve: bool,
            gq: Optional[GeneralQuartic] = None, shift: float = 0.0) -> PositivityCertificate:
    band = _band(rq, delta)
    c3 = check_c3_tristate(rq, band)
    c4 = check_c4_tristate(rq, band)
    trace = _trace(rq, band)
    if c3 is None or c4 is None:
        if resolve:
            verdict, witness = _resolve_band(rq, c3, c4, gq, shift)
            if verdict is not None:
                return PositivityCertificate(verdict, witness, trace)
        return PositivityCertificate(Verdict.BOUNDARY, None, trace)
    if c3 != c4:
        raise InternalInconsistency(f"C3={c3} but C4={c4} for {rq}; trace={trace}")
    if c3:
        return PositivityCertificate(Verdict.POSITIVE, separation_witness(rq, band), trace)
    return PositivityCertificate(Verdict.NOT_POSITIVE, None, trace)


def is_positive(rq: ReducedQuartic, delta: Optional[float] = None, resolve: bool = True) -> PositivityCertificate:
    """Decide ``f(x) > 0`` for all real x via C3 and C4, which must agree.

    ``delta=None`` uses :func:`boundary_band`; ``delta=0`` forces a definite
    answer with exact zeros failing strict inequalities.  When a deciding
    quantity falls in the band and ``resolve`` is true, an exact rational
    check at float points is attempted before giving up with ``BOUNDARY``.
    """
    return _decide(rq, delta, resolve)


def is_positive_general(gq: GeneralQuartic, delta: Optional[float] = None,
                        resolve: bool = True) -> PositivityCertificate:
    """Positivity of ``a x**4 + ... + e``.

    ``a > 0`` reduces and delegates.  ``a < 0`` is never positive.  ``a = 0``
    is not a quartic; the lower-degree polynomial is classified by the sign of
    its infimum, computed in exact rationals, and the trace is marked
    degenerate.
    """
    _require_finite(gq.a, gq.b, gq.c, gq.d, gq.e)
    if gq.a > 0.0:
        rq, shift = reduce(gq)
        return _decide(rq, delta, resolve, gq, shift)
    if gq.a < 0.0:
        return PositivityCertificate(Verdict.NOT_POSITIVE, None, Trace())
    inf = oracle.low_degree_min(tuple(Fraction(v) for v in (gq.b, gq.c, gq.d, gq.e)))
    verdict = Verdict.POSITIVE if inf > 0 else Verdict.NOT_POSITIVE
    return PositivityCertificate(verdict, None, Trace(degenerate=True))
