"""
Invariants of a braid closure
=============================

Build a few braids, draw them and compute their Alexander and Jones
polynomials.
"""

from twistknot import BraidWord, alexander, fingerprint, jones, mirror
from twistknot.cli import render_ascii
from twistknot.families import TwistedTorusSpec, torus_braid

# %%
# The trefoil is the closure of sigma1^3 on two strands.
trefoil = torus_braid(2, 3)
print(render_ascii(trefoil))
print("alexander:", alexander(trefoil))
print("jones:    ", jones(trefoil))

# %%
# Mirroring flips every crossing. Alexander cannot see the difference, Jones can.
print("mirror alexander:", alexander(mirror(trefoil)))
print("mirror jones:    ", jones(mirror(trefoil)))

# %%
# The figure-eight knot is amphichiral, so its Jones polynomial is symmetric.
fig8 = BraidWord(3, (1, -2, 1, -2))
print(render_ascii(fig8))
print("jones:", jones(fig8))

# %%
# Two components: the Hopf link. Its Jones polynomial has half-integral
# powers of t and is printed in s = t^(1/2).
print("hopf jones:", jones(BraidWord(2, (1, 1))))

# %%
# A fingerprint bundles the invariants used for equivalence checks.
ttk = TwistedTorusSpec(5, 4, 2, 1).braid()
fp = fingerprint(ttk)
print(f"T(5,4;2,1): {fp.strands} strands, {fp.crossings} crossings")
print("  alexander:", fp.alexander)
print("  genus:    ", fp.genus_bound)
