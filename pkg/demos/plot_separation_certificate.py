"""
Separation certificates
=======================

A reduced quartic ``f(x) = x^4 + p x^2 + q x + r`` is written as
``h_m(x) - g_m(x)`` with ``h_m`` a square and ``g_m`` a quadratic.  When the
witness ``m < 0`` makes ``g_m`` negative everywhere, ``y = 0`` separates the
two pieces and ``f > 0`` follows at once.
"""
from pathlib import Path

import numpy as np

from quartic_positivity import ReducedQuartic, is_positive
from quartic_positivity.export import write_certificate_json, write_certificate_svg

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

###############################################################################
# The Gram-Charlier point (eta3, eta4) = (0, 0.1) reduces to x^4 - 6x^2 + 13.

rq = ReducedQuartic(-6.0, 0.0, 13.0)
cert = is_positive(rq)
w = cert.witness
print(cert.verdict.value, "witness m =", w.m, "sup g_m =", w.g_max)

###############################################################################
# Check the certificate by brute force on a grid: h_m >= 0, g_m < 0 and
# f = h_m - g_m.

xs = np.linspace(-5, 5, 2001)
print("min h_m :", w.h(xs).min())
print("max g_m :", w.g(xs).max())
print("max |f - (h_m - g_m)| :", np.abs(rq(xs) - (w.h(xs) - w.g(xs))).max())

write_certificate_json(cert, out / "certificate.json")
write_certificate_svg(rq, cert, out / "certificate.svg", x_range=(-4, 4))

###############################################################################
# A quartic that dips below zero gets no witness.

bad = ReducedQuartic(0.0, 1.0, 0.0)  # x^4 + x
print(is_positive(bad).verdict.value, bad(-0.5))
