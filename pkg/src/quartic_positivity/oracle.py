"""Brute-force ground truth for the closed-form positivity conditions.

Nothing here uses the separation method.  Real roots of cubics come from the
classical closed forms (trigonometric / Cardano), and the global minimum of a
reduced quartic comes from evaluating it at every real stationary point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from .core import ReducedQuartic

__all__ = [
    "CubicCoeffs",
    "Root",
    "GlobalMin",
    "cubic_real_roots",
    "global_min",
    "brute_positive",
    "cauchy_bound",
    "low_degree_min",
]

# two roots closer than this (relative to 1+|root|) are one multiple root
MULTIPLICITY_TOL = 1e-7
# accepted |cubic(root)| relative to scale * (1 + |root|**3)
RESIDUAL_TOL = 1e-8
# |4P^3 + 27Q^2| below this fraction of its rounding scale counts as a repeated root
_DISC_REL_TOL = 1e-12


@dataclass(frozen=True)
class CubicCoeffs:
    c3: float
    c2: float
    c1: float
    c0: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.c3, self.c2, self.c1, self.c0)):
            raise ValueError(f"non-finite cubic coefficients: {self}")

    def __call__(self, t: float) -> float:
        return ((self.c3 * t + self.c2) * t + self.c1) * t + self.c0

    def derivative(self, t: float) -> float:
        return (3.0 * self.c3 * t + 2.0 * self.c2) * t + self.c1

    @property
    def scale(self) -> float:
        return abs(self.c3) + abs(self.c2) + abs(self.c1) + abs(self.c0)


class Root(NamedTuple):
    value: float
    multiplicity: int


@dataclass(frozen=True)
class GlobalMin:
    x_star: float
    f_min: float


def _polish(c: CubicCoeffs, t: float, steps: int = 4) -> float:
    # Newton steps while the residual keeps shrinking
    for _ in range(steps):
        d = c.derivative(t)
        if d == 0.0:
            break
        t1 = t - c(t) / d
        if not (math.isfinite(t1) and abs(c(t1)) < abs(c(t))):
            break
        t = t1
    return t


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    if a == 0.0:
        if b == 0.0:
            return []
        return [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        if -disc <= _DISC_REL_TOL * (b * b + 4.0 * abs(a * c)):
            disc = 0.0
        else:
            return []
    s = math.sqrt(disc)
    # avoid cancellation: compute the larger-magnitude root first
    w = -0.5 * (b + math.copysign(s, b))
    if w == 0.0:
        return [0.0, 0.0]
    return sorted([w / a, c / w])


def _depressed_cubic_roots(P: float, Q: float, p_scale: float, q_scale: float) -> list[float]:
    """Real roots of y**3 + P*y + Q = 0.

    ``p_scale`` and ``q_scale`` bound the magnitudes that went into computing
    ``P`` and ``Q``; they set how close to zero the discriminant must be to
    be treated as a repeated root.
    """
    if P == 0.0 and Q == 0.0:
        return [0.0, 0.0, 0.0]
    disc = 4.0 * P**3 + 27.0 * Q * Q
    if disc <= _DISC_REL_TOL * (4.0 * p_scale**3 + 27.0 * q_scale**2):
        # three real roots (possibly repeated): trigonometric form
        if P == 0.0:
            return [0.0, 0.0, 0.0]
        s = math.sqrt(-P / 3.0) if P < 0.0 else 0.0
        if s == 0.0:
            y = -math.copysign(abs(Q) ** (1.0 / 3.0), Q)
            return [y, y, y]
        arg = (3.0 * Q / (2.0 * P)) / s
        arg = min(1.0, max(-1.0, arg))
        phi = math.acos(arg) / 3.0
        return sorted(2.0 * s * math.cos(phi - 2.0 * math.pi * k / 3.0) for k in range(3))
    # one real root: Cardano with the cancellation-free branch
    sq = math.sqrt(Q * Q / 4.0 + P**3 / 27.0)
    w = -0.5 * Q - math.copysign(sq, Q)
    u = math.copysign(abs(w) ** (1.0 / 3.0), w)
    if u == 0.0:
        return [0.0]
    return [u - P / (3.0 * u)]


def _cluster(values: list[float]) -> list[Root]:
    out: list[Root] = []
    group: list[float] = []
    for v in sorted(values):
        if group and abs(v - group[-1]) < MULTIPLICITY_TOL * (1.0 + abs(group[-1])):
            group.append(v)
            continue
        if group:
            out.append(Root(math.fsum(group) / len(group), len(group)))
        group = [v]
    if group:
        out.append(Root(math.fsum(group) / len(group), len(group)))
    return out


def cubic_real_roots(c: CubicCoeffs) -> list[Root]:
    """All real roots of ``c3*t**3 + c2*t**2 + c1*t + c0``, with multiplicities.

    Degrades to the quadratic or linear case when leading coefficients vanish.
    The identically-zero polynomial returns an empty list.
    """
    try:
        raw = _raw_roots(c)
    except OverflowError:
        raw = []
    if not all(math.isfinite(v) for v in raw):
        # roots beyond float range: the leading coefficient is negligible
        raw = _raw_roots(CubicCoeffs(0.0, c.c2, c.c1, c.c0)) if c.c3 != 0.0 else []
    raw = [v for v in raw if math.isfinite(v)]
    return [Root(_polish(c, r.value) if r.multiplicity == 1 else r.value, r.multiplicity)
            for r in _cluster(raw)]


def _raw_roots(c: CubicCoeffs) -> list[float]:
    if c.c3 == 0.0:
        return _quadratic_roots(c.c2, c.c1, c.c0)
    a = c.c2 / c.c3
    b = c.c1 / c.c3
    d = c.c0 / c.c3
    P = b - a * a / 3.0
    Q = 2.0 * a**3 / 27.0 - a * b / 3.0 + d
    p_scale = abs(b) + a * a / 3.0
    q_scale = 2.0 * abs(a) ** 3 / 27.0 + abs(a * b) / 3.0 + abs(d)
    closed = [y - a / 3.0 for y in _depressed_cubic_roots(P, Q, p_scale, q_scale)]
    # the dominant root is well conditioned; the other two come from backward
    # deflation, which keeps small and clustered roots accurate
    t1 = _polish(c, max(closed, key=abs))
    if t1 == 0.0 or not math.isfinite(t1):
        return closed
    e0 = -c.c0 / t1
    e1 = (e0 - c.c1) / t1
    rest = _quadratic_roots(c.c3, e1, e0)
    if not rest and len(closed) == 3:
        # a near-triple root can deflate to a slightly complex pair; keep its
        # vertex as a double root only if the cubic really vanishes there
        tv = -e1 / (2.0 * c.c3)
        if abs(c(tv)) <= RESIDUAL_TOL * c.scale * (1.0 + abs(tv) ** 3):
            rest = [tv, tv]
    return [t1] + rest


def cauchy_bound(rq: ReducedQuartic) -> float:
    """Every real root of x**4 + p x**2 + q x + r lies in [-B, B]."""
    return 1.0 + max(abs(rq.p), abs(rq.q), abs(rq.r))


def _f(rq: ReducedQuartic, x: float) -> float:
    # kept local so the oracle does not depend on quartic_core's evaluator
    x2 = x * x
    return (x2 + rq.p) * x2 + rq.q * x + rq.r


def global_min(rq: ReducedQuartic) -> GlobalMin:
    """Global minimum of x**4 + p x**2 + q x + r over the reals.

    The minimum is attained at a real root of f'(x) = 4x**3 + 2p x + q,
    which always has at least one.
    """
    stationary = cubic_real_roots(CubicCoeffs(4.0, 0.0, 2.0 * rq.p, rq.q))
    best = min((_f(rq, r.value), r.value) for r in stationary)
    return GlobalMin(x_star=best[1], f_min=best[0])


def brute_positive(rq: ReducedQuartic) -> bool:
    return global_min(rq).f_min > 0.0


def low_degree_min(coeffs: tuple[float, ...]) -> float:
    """Infimum over the reals of a polynomial of degree <= 3.

    ``coeffs`` are highest degree first, e.g. ``(b, c, d, e)``; leading zeros
    are stripped.  Returns ``-inf`` when the polynomial is unbounded below.
    Works unchanged on :class:`fractions.Fraction` input for an exact result.
    """
    cs = list(coeffs)
    while cs and cs[0] == 0.0:
        cs.pop(0)
    if len(cs) <= 1:
        return cs[0] if cs else 0.0
    if len(cs) == 3:
        a, b, c = cs
        if a < 0:
            return -math.inf
        return c - b * b / (4 * a)
    # odd degree (linear or cubic)
    return -math.inf
