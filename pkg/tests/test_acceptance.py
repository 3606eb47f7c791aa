"""Exit criteria, one test per criterion, each at its stated tolerance."""
import math
import time
import warnings

import numpy as np
import pytest

from quartic_positivity import core, oracle
from quartic_positivity.core import ReducedQuartic, Verdict
from quartic_positivity.gram_charlier import (
    ETA4_MAX,
    GC_BAND,
    DMPlusWarning,
    GCParams,
    RegionVerdict,
    gc_d_m_minus_closed,
    gc_in_region,
    gc_normalization,
    gc_quartic,
    gc_to_reduced,
    region_grid,
)

from conftest import report

N_SAMPLES = 100_000
INSIDE = RegionVerdict.INSIDE


@pytest.fixture(scope="module")
def random_samples():
    rng = np.random.default_rng(20240601)
    rows = rng.uniform(-10.0, 10.0, size=(N_SAMPLES, 3)).tolist()
    samples = []
    for p, q, r in rows:
        rq = ReducedQuartic(p, q, r)
        gm = oracle.global_min(rq)
        if abs(gm.f_min) > 1e-6 * (1.0 + abs(r)):
            samples.append(rq)
    return samples


@pytest.fixture(scope="module")
def gc_grid():
    t0 = time.perf_counter()
    samples = region_grid((0.0, 0.17), (-0.3, 0.3), 200, 200)
    return samples, time.perf_counter() - t0


def test_criterion_1_condition_equivalence(random_samples):
    t0 = time.perf_counter()
    disagreements = []
    for rq in random_samples:
        c3, c4, truth = core.check_c3(rq), core.check_c4(rq), oracle.brute_positive(rq)
        if not (c3 == c4 == truth):
            disagreements.append((rq, c3, c4, truth))
    elapsed = time.perf_counter() - t0
    ok = not disagreements and elapsed < 10.0
    report(1, ok, f"{len(random_samples)} kept of {N_SAMPLES}, {len(disagreements)} disagreements, "
                  f"{elapsed:.2f}s (< 10s)")
    assert not disagreements, disagreements[:5]
    assert elapsed < 10.0


def test_criterion_2_closed_form_consistency(random_samples):
    worst, n = 0.0, 0
    for rq in random_samples:
        cp = core.critical_ms(rq)
        if not cp.exists:
            continue
        n += 1
        a, b = core.d_at_m_minus(rq), core.d_of_m(rq, cp.m_minus)
        worst = max(worst, abs(a - b) / max(1.0, abs(a), abs(b)))
    ok = worst <= 1e-9
    report(2, ok, f"{n} samples, worst relative gap {worst:.2e} (<= 1e-9)")
    assert ok


def test_criterion_3_certificate_soundness(random_samples):
    xs = np.linspace(-10.0, 10.0, 1001)
    n_pos, failures = 0, []
    for rq in random_samples:
        cert = core.is_positive(rq)
        if cert.verdict is not Verdict.POSITIVE:
            continue
        n_pos += 1
        w = cert.witness
        d_minus = core.d_of_m(rq, w.m)
        f = core.eval_reduced(rq, xs)
        gap = np.max(np.abs(f - (w.h(xs) - w.g(xs))) / np.maximum(1.0, np.abs(f)))
        good = (w.m < 0 and w.g_max < 0
                and abs(w.g_max - (-d_minus / (8 * w.m))) <= 1e-9 * max(1.0, abs(w.g_max))
                and gap <= 1e-9)
        if not good:
            failures.append((rq, w, gap))
    ok = not failures and n_pos > 0
    report(3, ok, f"{n_pos} positive certificates, {len(failures)} unsound")
    assert ok, failures[:5]


def test_criterion_4_gc_region(gc_grid):
    samples, elapsed = gc_grid
    by_point = {(s.params.eta3, s.params.eta4): s.verdict for s in samples}
    # (a) exact mirror symmetry, on the lattice and against direct evaluation
    asym = sum(by_point[(-e3, e4)] is not v for (e3, e4), v in by_point.items())
    asym += sum(gc_in_region(GCParams(-s.params.eta3, s.params.eta4)).verdict is not s.verdict for s in samples)
    # (b) nothing inside at eta4 >= 1/6 + delta or eta4 < 0
    beyond = sum(v is INSIDE for (e3, e4), v in by_point.items() if e4 >= ETA4_MAX + GC_BAND)
    negative = sum(gc_in_region(GCParams(e3, e4)).verdict is INSIDE
                   for e3 in np.linspace(-0.3, 0.3, 21) for e4 in (-1e-3, -0.05, -0.17))
    # (c) anchor points
    anchors = (gc_in_region(GCParams(0, 0.1)).verdict is INSIDE
               and gc_in_region(GCParams(0.3, 0.1)).verdict is not INSIDE
               and gc_in_region(GCParams(0, 1 / 6)).verdict is not INSIDE)
    # (d) agreement with the brute-force oracle on P / eta4
    mismatches, checked, banded = [], 0, 0
    for s in samples:
        if not s.params.eta4 > GC_BAND:
            continue
        if s.verdict is RegionVerdict.BOUNDARY:
            banded += 1
            continue
        checked += 1
        truth = oracle.brute_positive(core.reduce(gc_quartic(s.params))[0])
        if truth is not (s.verdict is INSIDE):
            mismatches.append(s)
    ok = not asym and not beyond and not negative and anchors and not mismatches and elapsed < 30.0
    report(4, ok, f"asym={asym} beyond_1/6={beyond} eta4<0={negative} anchors={anchors} "
                  f"oracle mismatches={len(mismatches)}/{checked} (band {banded}), "
                  f"{sum(v is INSIDE for v in by_point.values())} inside, grid {elapsed:.2f}s (< 30s)")
    assert ok, mismatches[:5]


def test_criterion_5_constant_discrepancy():
    g = GCParams(0.0, 0.1)
    general = core.d_at_m_minus(gc_to_reduced(g))
    right = gc_d_m_minus_closed(g, -0.5)
    wrong = gc_d_m_minus_closed(g, -1.5)
    ok = (abs(general - (-5.069)) <= 0.01
          and abs(right - general) <= 1e-6 * abs(general)
          and abs(wrong - general) > 0.1 * abs(general))
    report(5, ok, f"D(m-)={general:.6f}, (27/4)^-1/2 bracket={right:.6f}, (27/4)^-3/2 variant={wrong:.6f}")
    assert ok


def test_criterion_6_normalization(gc_grid):
    samples, _ = gc_grid
    idx = sorted({int(round(k)) for k in np.linspace(0, 199, 21)})
    sub = [samples[i * 200 + j] for i in idx for j in idx]
    worst = max(abs(gc_normalization(s.params) - 1.0) for s in sub)
    n_out = sum(s.verdict is not INSIDE for s in sub)
    ok = len(sub) == 441 and worst <= 1e-6
    report(6, ok, f"{len(sub)} points ({n_out} not inside), worst |integral - 1| = {worst:.2e} (<= 1e-6)")
    assert ok


def test_criterion_7_d_m_plus_nonnegative(gc_grid):
    samples, _ = gc_grid
    violations, n = [], 0
    for s in samples:
        if s.verdict is not INSIDE or not GC_BAND < s.params.eta4 < ETA4_MAX:
            continue
        n += 1
        band = core.boundary_band(gc_to_reduced(s.params))
        if s.trace.d_m_plus < -band:
            violations.append(s)
    with warnings.catch_warnings():
        warnings.simplefilter("error", DMPlusWarning)
        [gc_in_region(s.params) for s in samples[::37]]
    worst = min(s.trace.d_m_plus for s in samples if s.verdict is INSIDE and s.trace)
    ok = not violations
    report(7, ok, f"{n} inside points, {len(violations)} with D(m+) < -delta; smallest D(m+) = {worst:.4g}")
    assert ok, violations[:5]


def test_criterion_8_degenerate_branch():
    rq = ReducedQuartic(2, 0, 1)
    cert = core.is_positive(rq)
    ds = core.discriminants(rq)
    band = core.boundary_band(rq)
    first, second = core._c4_parts(ds, band)
    cp = core.critical_ms(rq)
    ok = (cert.verdict is Verdict.POSITIVE
          and cert.trace.c4_branch == "second" and second is True and first is not True
          and core.check_c3(rq) and cp.m_plus == 0.0 and core.d_of_m(rq, cp.m_plus) == 0.0
          and cert.witness.g_max < 0)
    report(8, ok, f"verdict={cert.verdict.value} branch={cert.trace.c4_branch} "
                  f"m+={cp.m_plus} D(m+)={core.d_of_m(rq, cp.m_plus)}")
    assert ok
