"""
The Gram-Charlier positivity region
===================================

``P(z) = 1 + eta3 He3(z) + eta4 He4(z)`` must stay positive for the
Gram-Charlier expansion to be a density.  The valid (eta4, eta3) set is cut out
by ``0 < eta4 < 1/6``, ``m_minus < 0`` and ``D(m_minus) < 0``.
"""
from pathlib import Path

import numpy as np

from quartic_positivity.export import RegionPlotConfig, write_region_csv, write_region_svg
from quartic_positivity.gram_charlier import (
    GCParams,
    RegionVerdict,
    boundary_curve,
    gc_in_region,
    gc_normalization,
    region_grid,
)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

samples = region_grid((0.0, 0.17), (-0.3, 0.3), 200, 200)
inside = sum(s.verdict is RegionVerdict.INSIDE for s in samples)
print(f"{inside} of {len(samples)} grid points are valid densities")

curve = boundary_curve(np.linspace(0.002, 0.166, 60))
e4_peak, e3_peak = max(curve, key=lambda t: t[1])
print(f"widest at eta4 = {e4_peak:.4f}: |eta3| <= {e3_peak:.6f} (skewness {6 * e3_peak:.4f})")

write_region_svg(samples, curve, RegionPlotConfig(), out / "gc_region.svg")
write_region_csv(samples, out / "gc_region.csv")

###############################################################################
# Every expansion integrates to one, valid density or not.

for g in (GCParams(0, 0.1), GCParams(0.3, 0.1)):
    print(g, gc_in_region(g).verdict.value, gc_normalization(g))

###############################################################################
# Optional raster view.

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    Z = np.array([s.verdict is RegionVerdict.INSIDE for s in samples]).reshape(200, 200)
    plt.imshow(Z, origin="lower", extent=(0, 0.17, -0.3, 0.3), aspect="auto", cmap="Blues")
    e4, e3 = zip(*curve)
    plt.plot(e4, e3, "r", e4, [-v for v in e3], "r")
    plt.xlabel("eta4")
    plt.ylabel("eta3")
    plt.savefig(out / "gc_region.png", dpi=100)
