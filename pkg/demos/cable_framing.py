"""
Which slope is the cable?
=========================

The twisted torus knot T(4s+1, 4; 2, 1) is a 2-cable on the torus knot
T(2, 2s+1). A cable's slope depends on the framing. Here the Alexander
polynomial decides between two candidate slopes, and the Jones polynomial
double-checks the braid realization.
"""

from twistknot import alexander, jones
from twistknot.braid import BraidWord
from twistknot.families import TwistedTorusSpec, cable_braid
from twistknot.invariants import cable_alexander, torus_alexander

for s in (1, 2):
    knot = TwistedTorusSpec(4 * s + 1, 4, 2, 1).braid()
    delta = torus_alexander(2, 2 * s + 1)
    print(f"s = {s}: T({4 * s + 1},4;2,1)")
    for slope in (4 * s + 1, 8 * s + 3):
        same = alexander(knot) == cable_alexander(delta, 2, slope)
        print(f"  (2,{slope})-cable alexander matches: {same}")

# %%
# On the braid side the cable is built from the 2-braid sigma1^(2s+1) with
# extra twisting j. The companion writhe is 2s+1, so the blackboard slope is
# 2 * (2s+1) + j. Seifert slope 8s+3 corresponds to j = 4s+1.
for s in (1, 2):
    knot = TwistedTorusSpec(4 * s + 1, 4, 2, 1).braid()
    companion = BraidWord(2, (1,) * (2 * s + 1))
    for j in (-1, 4 * s + 1):
        same = jones(knot) == jones(cable_braid(companion, 2, j))
        print(f"s = {s}, twist j = {j:>2}: jones matches {same}")
