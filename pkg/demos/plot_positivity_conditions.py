"""
Equivalent positivity conditions
================================

Four routes to the same answer, compared on random reduced quartics:

* C2 - sign pattern of the real roots of the cubic D(m),
* C3 - D(m) at its two stationary points,
* C4 - the classical discriminant quadruple,
* brute force - evaluate f at every real stationary point.
"""
import collections

import numpy as np

from quartic_positivity import core, oracle

rng = np.random.default_rng(0)
rows = rng.uniform(-10, 10, size=(20_000, 3))

tally = collections.Counter()
for p, q, r in rows:
    rq = core.ReducedQuartic(p, q, r)
    truth = oracle.brute_positive(rq)
    tally["positive" if truth else "not positive"] += 1
    tally["C2 agrees"] += core.check_c2(rq) is truth
    tally["C3 agrees"] += core.check_c3(rq) is truth
    tally["C4 agrees"] += core.check_c4(rq) is truth

for k, v in sorted(tally.items()):
    print(f"{k:>14}: {v}")

###############################################################################
# The closed form for D(m_minus) against direct evaluation at m_minus.

gaps = []
for p, q, r in rows[:2000]:
    rq = core.ReducedQuartic(p, q, r)
    cp = core.critical_ms(rq)
    if cp.exists:
        gaps.append(abs(core.d_at_m_minus(rq) - core.d_of_m(rq, cp.m_minus)))
print("largest |closed form - direct| :", max(gaps))

###############################################################################
# Exact zeros sit on the frontier.  (x^2 - 1)^2 touches zero at x = +-1: with
# the band, the conditions are undecided in floating point, and an exact
# rational evaluation at x = 1 settles it.

touch = core.ReducedQuartic(-2.0, 0.0, 1.0)
print(core.check_c3_tristate(touch), core.check_c4_tristate(touch))
print(core.is_positive(touch, resolve=False).verdict.value, core.is_positive(touch).verdict.value)
