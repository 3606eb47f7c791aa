"""CSV, JSON and SVG writers for certificates, region grids and boundary curves.

All writers are byte-deterministic: CSV floats use 17 significant digits,
JSON floats use Python's shortest round-trip ``repr``.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import PositivityCertificate, ReducedQuartic, Verdict, eval_reduced
from .errors import EmptyInput, IncompleteGrid
from .gram_charlier import (
    BoundaryCurve,
    GCParams,
    RegionSample,
    RegionTrace,
    RegionVerdict,
)

__all__ = [
    "RegionPlotConfig",
    "CSV_HEADER",
    "write_region_csv",
    "read_region_csv",
    "write_boundary_csv",
    "write_region_json",
    "region_svg",
    "write_region_svg",
    "certificate_dict",
    "write_certificate_json",
    "certificate_svg",
    "write_certificate_svg",
]

CSV_HEADER = ("eta3", "eta4", "verdict", "m_minus", "d_m_minus")
SVG_NS = "http://www.w3.org/2000/svg"


@dataclass(frozen=True)
class RegionPlotConfig:
    width_px: int = 640
    height_px: int = 480
    inside_color: str = "#3b6fb6"
    outside_color: str = "#f4f4f4"
    boundary_color: str = "#e0a030"
    curve_color: str = "#c0392b"
    show_curve: bool = True
    margin_px: int = field(default=56)

    def __post_init__(self):
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError(f"plot must be at least 64x64 px, got {self.width_px}x{self.height_px}")


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else format(x, ".17g")


def _json_num(x: Optional[float]) -> Optional[float]:
    if x is None or not math.isfinite(x):
        return None
    return float(x)


def _write_text(path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {os.fspath(path)!r}: {exc.strerror}") from exc


def write_region_csv(samples: Sequence[RegionSample], path) -> None:
    if not samples:
        raise EmptyInput("no region samples to write")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for s in samples:
        t = s.trace
        w.writerow([
            _fmt(s.params.eta3),
            _fmt(s.params.eta4),
            s.verdict.value,
            _fmt(t.m_minus if t else None),
            _fmt(t.d_m_minus if t else None),
        ])
    _write_text(path, buf.getvalue())


def read_region_csv(path) -> list[RegionSample]:
    """Inverse of :func:`write_region_csv` (``d_m_plus`` is not stored)."""
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"{os.fspath(path)!r}: unexpected header {rows[:1]}")
    out = []
    for eta3, eta4, verdict, mm, dm in rows[1:]:
        trace = RegionTrace(float(mm), float(dm)) if mm else None
        out.append(RegionSample(GCParams(float(eta3), float(eta4)), RegionVerdict(verdict), trace))
    return out


def write_boundary_csv(curve: BoundaryCurve, path) -> None:
    lines = ["eta4,eta3_max"] + [f"{_fmt(e4)},{_fmt(e3)}" for e4, e3 in curve]
    _write_text(path, "\n".join(lines) + "\n")


def write_region_json(samples: Sequence[RegionSample], path, curve: Optional[BoundaryCurve] = None) -> None:
    if not samples:
        raise EmptyInput("no region samples to write")
    doc = {
        "samples": [
            {
                "eta3": s.params.eta3,
                "eta4": s.params.eta4,
                "verdict": s.verdict.value,
                "m_minus": _json_num(s.trace.m_minus) if s.trace else None,
                "d_m_minus": _json_num(s.trace.d_m_minus) if s.trace else None,
                "d_m_plus": _json_num(s.trace.d_m_plus) if s.trace else None,
            }
            for s in samples
        ],
        "boundary": [[e4, e3] for e4, e3 in curve] if curve is not None else None,
    }
    _write_text(path, json.dumps(doc, indent=1, allow_nan=False) + "\n")


def _lattice(samples: Sequence[RegionSample]):
    if not samples:
        raise EmptyInput("no region samples to plot")
    xs = sorted({s.params.eta4 for s in samples})
    ys = sorted({s.params.eta3 for s in samples})
    cells = {(s.params.eta4, s.params.eta3): s.verdict for s in samples}
    if len(cells) != len(samples) or len(cells) != len(xs) * len(ys):
        raise IncompleteGrid(f"{len(samples)} samples do not fill a {len(xs)}x{len(ys)} lattice")
    return xs, ys, cells


def _edges(vals: list[float]) -> list[float]:
    # cell edges halfway between lattice points, extended by half a step at the ends
    if len(vals) == 1:
        return [vals[0] - 0.5, vals[0] + 0.5]
    mids = [(a + b) / 2.0 for a, b in zip(vals, vals[1:])]
    return [2 * vals[0] - mids[0]] + mids + [2 * vals[-1] - mids[-1]]


def _g(x: float) -> str:
    return format(x, ".3f").rstrip("0").rstrip(".")


def region_svg(samples: Sequence[RegionSample], curve: Optional[BoundaryCurve] = None,
               cfg: RegionPlotConfig = RegionPlotConfig()) -> str:
    """Render the region lattice: eta4 on the horizontal axis, eta3 vertical."""
    xs, ys, cells = _lattice(samples)
    xe, ye = _edges(xs), _edges(ys)
    m = cfg.margin_px
    pw, ph = cfg.width_px - 2 * m, cfg.height_px - 2 * m

    def px(v):
        return m + (v - xe[0]) / (xe[-1] - xe[0]) * pw

    def py(v):
        return m + ph - (v - ye[0]) / (ye[-1] - ye[0]) * ph

    ET.register_namespace("", SVG_NS)
    root = ET.Element(f"{{{SVG_NS}}}svg", {
        "version": "1.1",
        "width": str(cfg.width_px),
        "height": str(cfg.height_px),
        "viewBox": f"0 0 {cfg.width_px} {cfg.height_px}",
    })
    ET.SubElement(root, "title").text = "Gram-Charlier positivity region"
    ET.SubElement(root, "rect", {"x": str(m), "y": str(m), "width": str(pw), "height": str(ph),
                                 "fill": cfg.outside_color, "class": "background"})
    fills = {RegionVerdict.INSIDE: cfg.inside_color, RegionVerdict.BOUNDARY: cfg.boundary_color}
    cells_g = ET.SubElement(root, "g", {"id": "cells", "shape-rendering": "crispEdges"})
    for j, y in enumerate(ys):
        for i, x in enumerate(xs):
            v = cells[(x, y)]
            if v is RegionVerdict.OUTSIDE:
                continue
            x0, x1, y0, y1 = px(xe[i]), px(xe[i + 1]), py(ye[j + 1]), py(ye[j])
            ET.SubElement(cells_g, "rect", {
                "class": v.value,
                "x": f"{x0:.4f}", "y": f"{y0:.4f}",
                "width": f"{x1 - x0:.4f}", "height": f"{y1 - y0:.4f}",
                "fill": fills[v],
                "data-eta4": repr(x), "data-eta3": repr(y),
            })
    if cfg.show_curve and curve is not None and len(curve):
        for sign, name in ((1.0, "upper"), (-1.0, "lower")):
            pts = " ".join(f"{px(e4):.3f},{py(sign * e3):.3f}" for e4, e3 in curve)
            ET.SubElement(root, "polyline", {"id": f"boundary-{name}", "points": pts, "fill": "none",
                                             "stroke": cfg.curve_color, "stroke-width": "1.5"})
    axes = ET.SubElement(root, "g", {"id": "axes", "stroke": "#000", "font-family": "sans-serif",
                                     "font-size": "11"})
    ET.SubElement(axes, "rect", {"x": str(m), "y": str(m), "width": str(pw), "height": str(ph), "fill": "none"})
    for v in np.linspace(xs[0], xs[-1], 5):
        X = px(v)
        ET.SubElement(axes, "line", {"x1": f"{X:.3f}", "x2": f"{X:.3f}", "y1": str(m + ph), "y2": str(m + ph + 4)})
        ET.SubElement(axes, "text", {"x": f"{X:.3f}", "y": str(m + ph + 16), "text-anchor": "middle",
                                     "stroke": "none"}).text = _g(float(v))
    for v in np.linspace(ys[0], ys[-1], 5):
        Y = py(v)
        ET.SubElement(axes, "line", {"x1": str(m - 4), "x2": str(m), "y1": f"{Y:.3f}", "y2": f"{Y:.3f}"})
        ET.SubElement(axes, "text", {"x": str(m - 6), "y": f"{Y + 4:.3f}", "text-anchor": "end",
                                     "stroke": "none"}).text = _g(float(v))
    ET.SubElement(axes, "text", {"x": str(m + pw / 2), "y": str(cfg.height_px - 10), "text-anchor": "middle",
                                 "stroke": "none", "font-size": "14"}).text = "η₄"
    ET.SubElement(axes, "text", {"x": "14", "y": str(m + ph / 2), "text-anchor": "middle",
                                 "stroke": "none", "font-size": "14"}).text = "η₃"
    return '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def write_region_svg(samples: Sequence[RegionSample], curve: Optional[BoundaryCurve], cfg: RegionPlotConfig,
                     path) -> None:
    _write_text(path, region_svg(samples, curve, cfg))


def certificate_dict(cert: PositivityCertificate) -> dict:
    w = cert.witness
    return {
        "verdict": cert.verdict.value,
        "witness_m": w.m if w else None,
        "h_shift": w.h_shift if w else None,
        "g_coeffs": list(w.g_coeffs) if w else None,
        "g_max": w.g_max if w else None,
        "trace": {k: _json_num(v) for k, v in cert.trace.scalars().items()},
        "c4_branch": cert.trace.c4_branch,
        "degenerate": cert.trace.degenerate,
    }


def write_certificate_json(cert: PositivityCertificate, path) -> None:
    _write_text(path, json.dumps(certificate_dict(cert), indent=2, allow_nan=False) + "\n")


def certificate_svg(rq: ReducedQuartic, cert: PositivityCertificate, x_range=(-3.0, 3.0),
                    width_px: int = 640, height_px: int = 400, n: int = 301) -> str:
    """Plot of ``h_m``, ``g_m`` and the separating line ``y = 0``.

    Without a witness only ``f`` is drawn.
    """
    xs = np.linspace(x_range[0], x_range[1], n)
    curves: list[tuple[str, np.ndarray, str]] = [("f", eval_reduced(rq, xs), "#555")]
    if cert.witness is not None:
        curves += [("h_m", cert.witness.h(xs), "#1f4fb4"), ("g_m", cert.witness.g(xs), "#c0392b")]
    ally = np.concatenate([c[1] for c in curves] + [np.zeros(1)])
    lo, hi = float(np.min(ally)), float(np.max(ally))
    lo, hi = max(lo, -10.0 * max(1.0, abs(hi))), min(hi, 10.0 * max(1.0, abs(lo)) + 10.0)
    if hi <= lo:
        hi = lo + 1.0
    m = 40
    pw, ph = width_px - 2 * m, height_px - 2 * m

    def px(v):
        return m + (v - x_range[0]) / (x_range[1] - x_range[0]) * pw

    def py(v):
        return m + ph - (np.clip(v, lo, hi) - lo) / (hi - lo) * ph

    ET.register_namespace("", SVG_NS)
    root = ET.Element(f"{{{SVG_NS}}}svg", {"version": "1.1", "width": str(width_px), "height": str(height_px),
                                           "viewBox": f"0 0 {width_px} {height_px}"})
    ET.SubElement(root, "title").text = f"verdict: {cert.verdict.value}"
    ET.SubElement(root, "line", {"id": "separation-line", "x1": str(m), "x2": str(m + pw),
                                 "y1": f"{py(0.0):.3f}", "y2": f"{py(0.0):.3f}", "stroke": "#000",
                                 "stroke-dasharray": "12 4", "stroke-width": "2"})
    for name, ys, color in curves:
        pts = " ".join(f"{px(x):.3f},{py(y):.3f}" for x, y in zip(xs, ys))
        ET.SubElement(root, "polyline", {"id": name, "points": pts, "fill": "none", "stroke": color,
                                         "stroke-width": "2"})
    return '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def write_certificate_svg(rq: ReducedQuartic, cert: PositivityCertificate, path, **kw) -> None:
    _write_text(path, certificate_svg(rq, cert, **kw))
