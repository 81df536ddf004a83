"""Walk through the support trace that certifies curve-graph distance 2.

The genus-g system has 3g curves in three indexed families.  One iterate of
the map twists along the three index-1 curves and then rotates every index
down by one.  Tracking which curves the image of the starting curve can
meet, a step k where some curve is disjoint from both ends certifies
distance <= 2 and hence the exact upper bound 2/k.

Run as:  python3 demos/penner_walkthrough.py
"""

from curvebounds import PennerSystem, certify, k_star, step, trace
from curvebounds.penner import BaseCurve

GENUS = 3

system = PennerSystem(GENUS)
print(f"genus {GENUS}: curves {' '.join(str(c) for c in system.curves())}")
print()

support = frozenset({BaseCurve("a", GENUS)})
for k in range(3 * GENUS + 1):
    names = " ".join(sorted(str(c) for c in support))
    witness = certify(system, support, BaseCurve("a", GENUS)) if k else None
    note = f"   witness {witness}" if witness else ""
    print(f"S_{k:<2} = {{{names}}}{note}")
    support = step(system, support)

print()
result = trace(GENUS)
print(f"best certified iterate: k = {result.best_k}, bound 2/k = {result.bound}")
print(f"closed-form guarantee:  k* = {k_star(GENUS)}")
print(f"supports saturate after {len(result.masks) - 1} iterates")
