"""
General quartics
================

``a x^4 + b x^3 + c x^2 + d x + e`` with ``a > 0`` is shifted by
``z = x + b/(4a)`` to a reduced quartic; the verdict carries over unchanged.
"""
from quartic_positivity import GeneralQuartic, is_positive_general, reduce

for coeffs in [(1, 4, 6, 4, 1), (2, 0, 4, 0, 2), (1, -4, 8, -8, 5), (-1, 0, 0, 0, 5), (0, 0, 1, 0, 1)]:
    gq = GeneralQuartic(*coeffs)
    cert = is_positive_general(gq)
    note = " (degenerate: not a quartic)" if cert.trace.degenerate else ""
    if gq.a > 0:
        rq, shift = reduce(gq)
        note += f"  reduced to p={rq.p:g} q={rq.q:g} r={rq.r:g}, shift {shift:g}"
    print(coeffs, cert.verdict.value + note)

###############################################################################
# Scaling all coefficients by a positive constant leaves the verdict alone.

gq = GeneralQuartic(1, -4, 8, -8, 5)
print([is_positive_general(gq.scaled(lam)).verdict.value for lam in (1e-3, 1, 7.5, 1e4)])
